#pragma once

#include <adnil/bigint.hpp>
#include <adnil/combinatorics.hpp>
#include <adnil/determinant.hpp>
#include <adnil/polynomial.hpp>
#include <adnil/series.hpp>
