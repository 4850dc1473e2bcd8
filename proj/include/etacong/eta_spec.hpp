#ifndef ETACONG_ETA_SPEC_HPP
#define ETACONG_ETA_SPEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include <etacong/eta_quotient.hpp>

namespace etacong
{

// EtaSpec text: "N=<level>; <delta>:<exp> <delta>:<exp> ..."
// e.g. "N=56; 1:-3 2:1 7:9 14:-1". Throws std::invalid_argument on malformed
// text, non-divisors, duplicate divisors or all-zero exponents.
EtaQuotient parse_eta_spec(std::string_view text);

// An integer linear combination of eta-quotients.
struct EtaTerm {
    Integer coefficient;
    EtaQuotient quotient;
};
using EtaExpression = std::vector<EtaTerm>;

// Either a bare EtaSpec, or bracketed terms with optional integer factors:
//   "[N=88; 1:-2 2:18 4:-8 11:2] + 256*[N=88; 1:-2 2:-6 4:16 11:2]"
//   "6*[N=56; 1:-3 2:1 7:9 14:-1]"
EtaExpression parse_eta_expression(std::string_view text);

std::string to_string(const EtaExpression &expr);

// sum c_i * expand(q_i), known up to trunc.
TruncatedSeries expand(const EtaExpression &expr, Exponent trunc);

} // namespace etacong

#endif
