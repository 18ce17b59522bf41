// Plain-text Cayley tables: a line holding n, then n rows of n whitespace
// separated 0-based indices. Lines whose first non-blank character is '#'
// are comments.

#ifndef POWERGRAPH_TABLE_IO_HPP_
#define POWERGRAPH_TABLE_IO_HPP_

#include "powergraph/group.hpp"

#include <iosfwd>
#include <string>

namespace powergraph {

/// Throws GroupError(BadFile) on malformed text, and the usual validation
/// errors when the table is not a group.
FiniteGroup read_cayley_table(std::istream& in, std::string label,
                              std::size_t bound = kDefaultConstructionBound);
/// Reads a file; the group label is "file:<path>".
FiniteGroup load_cayley_table(const std::string& path,
                              std::size_t bound = kDefaultConstructionBound);

void write_cayley_table(std::ostream& out, const FiniteGroup& g);

} // namespace powergraph

#endif // POWERGRAPH_TABLE_IO_HPP_
