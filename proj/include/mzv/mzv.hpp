#pragma once

#include <mzv/bernoulli.hpp>
#include <mzv/extended_int.hpp>
#include <mzv/index.hpp>
#include <mzv/index_sum.hpp>
#include <mzv/io.hpp>
#include <mzv/linear_combination.hpp>
#include <mzv/positive_reduction.hpp>
#include <mzv/rational.hpp>
#include <mzv/relations.hpp>
#include <mzv/series.hpp>
#include <mzv/shuffle.hpp>
#include <mzv/stuffle.hpp>
#include <mzv/verify.hpp>
#include <mzv/word.hpp>
