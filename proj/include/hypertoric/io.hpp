/**
 * Text formats and input digests.
 *
 *   matrix file:  "d n" then d rows of n integers
 *   quiver file:  "V E" then E lines "i j" (tail head), 0-indexed
 *
 * Lines starting with '#' are comments.  Malformed input raises ParseError
 * with a line and column.
 */

#ifndef HYPERTORIC_IO_HPP
#define HYPERTORIC_IO_HPP

#include <string>

#include "hypertoric/exact.hpp"
#include "hypertoric/quiver.hpp"

namespace hypertoric {

IntMatrix parse_matrix(const std::string& text);
Quiver parse_quiver(const std::string& text);

/// "-3,2,2,2" -> (-3, 2, 2, 2); rationals "p/q" are accepted too.
RatVector parse_rational_list(const std::string& text);
IntVector parse_int_list(const std::string& text);

std::string read_file(const std::string& path);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string digest(const std::string& text);

/// Canonical text of a matrix and of a quiver (what the digest is taken over).
std::string canonical_text(const IntMatrix& a);
std::string canonical_text(const Quiver& q);

}   // namespace hypertoric

#endif
