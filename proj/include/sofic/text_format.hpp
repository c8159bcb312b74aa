#ifndef SOFIC_TEXT_FORMAT_HPP
#define SOFIC_TEXT_FORMAT_HPP

#include <string>
#include <string_view>

#include "sofic/int_matrix.hpp"
#include "sofic/symbolic_matrix.hpp"

namespace sofic {

/// Symbolic matrix text format:
///
///   labels: a1 a2 a3 a4
///   2a1+a2|a2+a3
///   a4|a4
///
/// One header line declares the alphabet; each following line is a matrix
/// row with entries separated by '|'. An entry is '.' for the empty set or
/// a '+'-joined list of terms "coeff word", where the coefficient 1 is
/// implicit and a word is the concatenation of label names (tokenized by
/// greedy longest match, unambiguous because alphabets are prefix-free).
/// Blank lines and lines starting with '#' are ignored.
SymbolicMatrix parse_matrix(std::string_view text);

/// Canonical form: alphabet in canonical order, terms sorted, coefficient 1
/// omitted, '.' for the empty sum. parse(serialize(A)) == A.
std::string serialize_matrix(const SymbolicMatrix& A);

/// Plain integer matrices: rows of '|'-separated nonnegative integers.
IntegerMatrix parse_integer_matrix(std::string_view text);
std::string serialize_integer_matrix(const IntegerMatrix& m);

}  // namespace sofic

#endif
