#pragma once

#include <string>

#include <gmpxx.h>

namespace fockasym {

/// printf("%.{significant}g")-style rendering of an exact rational, rounded half away from zero.
std::string render_decimal(const mpq_class& value, int significant);

/// Same rendering for coeff * sqrt(radicand), radicand >= 0; digits come from integer square roots.
std::string render_decimal_surd(const mpq_class& coeff, const mpq_class& radicand, int significant);

} // namespace fockasym
