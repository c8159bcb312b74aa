#ifndef SOFIC_DOT_EXPORT_HPP
#define SOFIC_DOT_EXPORT_HPP

#include <string>

#include "sofic/symbolic_matrix.hpp"

namespace sofic {

/// Graph-description export: nodes V1..Vn, one edge per unit of coefficient
/// with the word as its label attribute.
std::string to_dot(const SymbolicMatrix& A);

}  // namespace sofic

#endif
