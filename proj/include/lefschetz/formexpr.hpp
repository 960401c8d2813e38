#ifndef LEFSCHETZ_FORMEXPR_HPP
#define LEFSCHETZ_FORMEXPR_HPP

#include <string>

#include "lefschetz/form.hpp"

namespace lefschetz {

// Parses the CLI form mini-language:
//   expr  := ['-'] term (('+'|'-') term)*
//   term  := [coeff '*'] basis
//   coeff := integer | 'p/q'
//   basis := 'e' digits            (one digit per index; dimensions <= 9)
//          | 'e{' i (',' j)* '}'   (required for dimensions >= 10)
// Whitespace-insensitive. All terms must have the same degree; indices must
// be in range; repeated indices in one basis element annihilate the term.
Form<Rational> parse_form_expression(const std::string& text, int dim);

}  // namespace lefschetz

#endif
