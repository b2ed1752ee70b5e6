#pragma once

#include "solvgenus/centralizer.hpp"
#include "solvgenus/classification.hpp"
#include "solvgenus/commensurability.hpp"
#include "solvgenus/conjugacy.hpp"
#include "solvgenus/core_algebra.hpp"
#include "solvgenus/error.hpp"
#include "solvgenus/integer.hpp"
#include "solvgenus/modular_geometry.hpp"
#include "solvgenus/quadratic_irrational.hpp"
#include "solvgenus/svg_figure.hpp"
#include "solvgenus/text_format.hpp"
