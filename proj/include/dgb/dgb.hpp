#ifndef DGB_DGB_HPP
#define DGB_DGB_HPP

#include <dgb/completion.hpp>
#include <dgb/error.hpp>
#include <dgb/field.hpp>
#include <dgb/io.hpp>
#include <dgb/monomial.hpp>
#include <dgb/ordering.hpp>
#include <dgb/permutation.hpp>
#include <dgb/polynomial.hpp>
#include <dgb/quotient.hpp>
#include <dgb/reduction.hpp>
#include <dgb/report.hpp>
#include <dgb/ring.hpp>
#include <dgb/shift.hpp>
#include <dgb/symmetric.hpp>

#endif
