/// Umbrella header: exact core, partitions, coefficients, expansion, solver,
/// numerics and JSON encoding.
#pragma once

#include <lzeta/bernoulli.hpp>
#include <lzeta/bigfloat.hpp>
#include <lzeta/coefficients.hpp>
#include <lzeta/expansion.hpp>
#include <lzeta/format.hpp>
#include <lzeta/matrix.hpp>
#include <lzeta/monomial.hpp>
#include <lzeta/numerics.hpp>
#include <lzeta/partitions.hpp>
#include <lzeta/rational.hpp>
#include <lzeta/report.hpp>
#include <lzeta/serialize.hpp>
#include <lzeta/solver.hpp>
