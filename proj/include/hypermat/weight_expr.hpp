#pragma once

// Command-line weight syntax with a symbolic dimension parameter, e.g.
// "(-2,2-2n)x(-n,-n)x(-2^n)": entries are integer linear expressions in n,
// and "^" repeats an entry (count may itself involve n).

#include "hypermat/weights.hpp"

#include <string>

namespace hypermat {

// Parse a single parenthesized factor, resolving n.
Weight parse_weight_expr(const std::string& text, int n);

// Parse a full a x b x c triple, resolving n; the c factor must come out at
// rank n.
TripleWeight parse_triple_expr(const std::string& text, int n);

} // namespace hypermat
