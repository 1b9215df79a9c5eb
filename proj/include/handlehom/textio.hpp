#pragma once

#include <string>

#include "handlehom/decomposition.hpp"
#include "handlehom/moves.hpp"

namespace hh {

/// Line-oriented interchange format, '#' comments, UTF-8, LF or CRLF input:
///   dimension <n>
///   relative <true|false>
///   orientation <oriented|cooriented|mod2>
///   handle <k> <label>
///   intersect <k> <k-handle-label> <(k-1)-handle-label> <integer>
/// Omitted intersection entries are zero.
HandleDecomposition parse_decomposition(const std::string& text);

/// Canonical form: LF endings, handles sorted by degree then label,
/// intersection entries sorted by degree then ((k-1)-label, k-label),
/// zero entries omitted. parse(serialize(d)) == d for every valid d.
std::string serialize_decomposition(const HandleDecomposition& d);

/// Decomposition text followed by one move line per applied move.
std::string serialize_journal(const MoveJournal& j);

/// Parses a snapshot-plus-moves file and replays it.
MoveJournal parse_journal(const std::string& text);

}  // namespace hh
