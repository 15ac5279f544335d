#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbw/derivations.hpp"
#include "pbw/poisson.hpp"

namespace pbw {

/// Expression over the generators and parameters with + - * / ^ and
/// parentheses. Products need an explicit '*'; '/' only divides by scalars;
/// negative powers need an invertible monomial. The result is normalized.
Element parse_expression(const Algebra& alg, std::string_view src);

/// Scalar text over the given parameter names.
Scalar parse_scalar(std::string_view src, const std::vector<std::string>& params);

enum class OutputMode { pretty, machine };

/// pretty: "q*x1*x2 - x3" style, deglex descending, "0" for zero.
/// machine: one "<scalar>\t<exponents>" line per term, empty for zero.
std::string format_element(const Presentation& p, const Element& f, OutputMode mode);
std::string format_monomial(const Presentation& p, const Monomial& m);

Element parse_machine(const Algebra& alg, std::string_view text);

/// Line-oriented document: top-level presentation fields, optional
/// [bracket] and [derivation] sections. Values are kept as text until
/// interpreted against a presentation.
struct Document {
  std::map<std::string, std::string> fields;  ///< n, r, params, gens
  struct Rel {
    std::string q;
    std::string c0;
    std::map<int, std::string> c;  ///< 1-based t
    int line = 0;
  };
  std::map<std::pair<int, int>, Rel> rels;  ///< 1-based (j, i)
  std::map<std::pair<int, int>, std::string> bracket;  ///< 1-based (i, j)
  std::vector<std::string> gamma;
  std::map<int, std::string> u;  ///< 1-based
  bool has_bracket = false;
  bool has_derivation = false;
};

Document parse_document(std::string_view text);
Presentation presentation_from(const Document& doc);
GeneratorBracket bracket_from(const Document& doc, const Algebra& alg);
GeneratorBracket parse_bracket_text(const Algebra& alg, std::string_view text);
GammaDerivation derivation_from(const Document& doc, const Algebra& alg);

Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);
std::string format_bracket(const GeneratorBracket& B);
std::string format_derivation(const Presentation& p, const GammaDerivation& d);

}  // namespace pbw
