#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "handlehom/decomposition.hpp"
#include "handlehom/errors.hpp"

namespace hh {

/// One Cerf move. Meaning of (a, b) by kind:
///   Slide:      a = moving handle, b = handle slid over (both degree k)
///   Cancel:     a = k-handle, b = (k-1)-handle
///   CreatePair: a = fresh k-label, b = fresh (k-1)-label
///   Reorient:   a = handle, b unused
struct Move {
  enum class Kind { Slide, Cancel, CreatePair, Reorient };
  Kind kind = Kind::Slide;
  int degree = 1;
  std::string a;
  std::string b;
  int sign = +1;  // Slide and CreatePair only

  bool operator==(const Move& other) const = default;
};

/// One move per line: "slide k <moving> <over> <+|->",
/// "cancel k <k_label> <km1_label>", "create k <k_label> <km1_label> <+|->",
/// "reorient k <label>".
std::string format_move(const Move& m);
Move parse_move(const std::string& line);

/// Basis change h ↦ h + sign*h': column(moving) of D_k gains sign*column(over)
/// and row(over) of D_{k+1} loses sign*row(moving).
HandleDecomposition slide(const HandleDecomposition& d, int k,
                          const std::string& moving, const std::string& over,
                          int sign);

/// Removes a cancelling pair with unit pivot D_k(km1_handle, k_handle) = ±1.
/// Remaining D_k becomes the Schur complement; the determined row of D_{k+1}
/// and column of D_{k-1} are dropped.
HandleDecomposition cancel(const HandleDecomposition& d, int k,
                           const std::string& k_handle,
                           const std::string& km1_handle);

/// Adds a standard cancelling (k-1, k)-pair away from the other handles:
/// the only new entry is D_k(new_km1, new_k) = sign.
HandleDecomposition create_pair(const HandleDecomposition& d, int k,
                                const std::string& new_k_label,
                                const std::string& new_km1_label, int sign);

/// Flips the orientation of one handle's core disc and belt sphere:
/// negates column(handle) of D_k and row(handle) of D_{k+1}.
HandleDecomposition reorient_handle(const HandleDecomposition& d, int k,
                                    const std::string& handle);

HandleDecomposition apply_move(const HandleDecomposition& d, const Move& m);

struct MoveJournal {
  HandleDecomposition initial;
  std::vector<Move> moves;
  HandleDecomposition result;
};

/// Replays the journal from its snapshot; the result must match bit-exactly.
HandleDecomposition replay(const MoveJournal& j);

/// A fuzz step produced a decomposition whose homology (either ring) or
/// Euler characteristic differs from the start. Carries the journal prefix
/// up to and including the offending move.
struct InvarianceViolationError : MathError {
  MoveJournal journal;
  InvarianceViolationError(const std::string& msg, MoveJournal j)
      : MathError(msg), journal(std::move(j)) {}
};

/// Applies `steps` random valid moves, deterministic in the seed, asserting
/// after every step that the boundary composition stays zero and that the
/// integral and mod-2 homology profiles and the Euler characteristic equal
/// their initial values.
MoveJournal fuzz_moves(const HandleDecomposition& d, int steps,
                       std::uint64_t seed);

}  // namespace hh
