#include "handlehom/moves.hpp"

#include <random>
#include <sstream>

#include "handlehom/homology.hpp"

namespace hh {

namespace {

std::size_t need_index(const HandleDecomposition& d, int k,
                       const std::string& label) {
  auto idx = d.handle_index(k, label);
  if (!idx)
    throw UnknownLabelError("no handle '" + label + "' in degree " +
                            std::to_string(k));
  return *idx;
}

void need_degree(const HandleDecomposition& d, int k) {
  if (k < 1 || k > d.dimension)
    throw SemanticError("move degree " + std::to_string(k) +
                        " outside 1.." + std::to_string(d.dimension));
}

void need_sign(int sign) {
  if (sign != 1 && sign != -1)
    throw SemanticError("move sign must be +1 or -1");
}

// Moves are pure; every result is re-checked against d.d = 0 rather than
// trusted.
void check_result(const HandleDecomposition& d) { require_valid(d); }

}  // namespace

HandleDecomposition slide(const HandleDecomposition& d, int k,
                          const std::string& moving, const std::string& over,
                          int sign) {
  need_degree(d, k);
  need_sign(sign);
  if (moving == over)
    throw SameHandleError("cannot slide handle '" + moving + "' over itself");
  std::size_t mi = need_index(d, k, moving);
  std::size_t oi = need_index(d, k, over);

  HandleDecomposition out = d;
  out.boundary_data(k) = out.boundary_data(k).add_scaled_col(oi, mi, sign);
  if (k + 1 <= d.dimension)
    out.boundary_data(k + 1) =
        out.boundary_data(k + 1).add_scaled_row(mi, oi, -sign);
  check_result(out);
  return out;
}

HandleDecomposition cancel(const HandleDecomposition& d, int k,
                           const std::string& k_handle,
                           const std::string& km1_handle) {
  need_degree(d, k);
  std::size_t mu = need_index(d, k, k_handle);
  std::size_t nu = need_index(d, k - 1, km1_handle);

  const IntMat& dk = d.boundary_data(k);
  const Int pivot = dk.at(nu, mu);
  if (pivot != 1 && pivot != -1)
    throw PivotNotUnitError("intersection number of '" + k_handle +
                            "' with '" + km1_handle + "' is " +
                            pivot.get_str() + ", need +1 or -1");

  HandleDecomposition out = d;
  // Schur complement on the remaining labels: delta - gamma * pivot^-1 * beta
  // (pivot^-1 = pivot for a unit).
  IntMat reduced(dk.rows() - 1, dk.cols() - 1);
  for (std::size_t i = 0, ri = 0; i < dk.rows(); ++i) {
    if (i == nu) continue;
    for (std::size_t j = 0, rj = 0; j < dk.cols(); ++j) {
      if (j == mu) continue;
      reduced.at(ri, rj) = dk.at(i, j) - dk.at(i, mu) * pivot * dk.at(nu, j);
      ++rj;
    }
    ++ri;
  }
  out.boundary_data(k) = std::move(reduced);
  out.handles[k].erase(out.handles[k].begin() + mu);
  out.handles[k - 1].erase(out.handles[k - 1].begin() + nu);
  // Content of these is forced by d.d = 0 and discarded with the handles.
  if (k + 1 <= d.dimension)
    out.boundary_data(k + 1) = out.boundary_data(k + 1).delete_row(mu);
  if (k - 1 >= 1)
    out.boundary_data(k - 1) = out.boundary_data(k - 1).delete_col(nu);
  check_result(out);
  return out;
}

HandleDecomposition create_pair(const HandleDecomposition& d, int k,
                                const std::string& new_k_label,
                                const std::string& new_km1_label, int sign) {
  need_degree(d, k);
  need_sign(sign);
  HandleDecomposition out = d;
  std::size_t nu = out.add_handle(k - 1, new_km1_label);
  std::size_t mu = out.add_handle(k, new_k_label);
  out.boundary_data(k).at(nu, mu) = sign;
  check_result(out);
  return out;
}

HandleDecomposition reorient_handle(const HandleDecomposition& d, int k,
                                    const std::string& handle) {
  need_degree(d, k);
  std::size_t i = need_index(d, k, handle);
  HandleDecomposition out = d;
  out.boundary_data(k) = out.boundary_data(k).negate_col(i);
  if (k + 1 <= d.dimension)
    out.boundary_data(k + 1) = out.boundary_data(k + 1).negate_row(i);
  check_result(out);
  return out;
}

HandleDecomposition apply_move(const HandleDecomposition& d, const Move& m) {
  switch (m.kind) {
    case Move::Kind::Slide:
      return slide(d, m.degree, m.a, m.b, m.sign);
    case Move::Kind::Cancel:
      return cancel(d, m.degree, m.a, m.b);
    case Move::Kind::CreatePair:
      return create_pair(d, m.degree, m.a, m.b, m.sign);
    case Move::Kind::Reorient:
      return reorient_handle(d, m.degree, m.a);
  }
  throw Error("corrupt move");
}

std::string format_move(const Move& m) {
  std::ostringstream out;
  switch (m.kind) {
    case Move::Kind::Slide:
      out << "slide " << m.degree << " " << m.a << " " << m.b << " "
          << (m.sign > 0 ? "+" : "-");
      break;
    case Move::Kind::Cancel:
      out << "cancel " << m.degree << " " << m.a << " " << m.b;
      break;
    case Move::Kind::CreatePair:
      out << "create " << m.degree << " " << m.a << " " << m.b << " "
          << (m.sign > 0 ? "+" : "-");
      break;
    case Move::Kind::Reorient:
      out << "reorient " << m.degree << " " << m.a;
      break;
  }
  return out.str();
}

Move parse_move(const std::string& line) {
  std::istringstream in(line);
  std::string word;
  if (!(in >> word)) throw SemanticError("empty move line");
  Move m;
  auto read_degree = [&] {
    if (!(in >> m.degree))
      throw SemanticError("move '" + line + "': missing degree");
  };
  auto read_label = [&](std::string& dst) {
    if (!(in >> dst))
      throw SemanticError("move '" + line + "': missing handle label");
  };
  auto read_sign = [&] {
    std::string s;
    if (!(in >> s) || (s != "+" && s != "-"))
      throw SemanticError("move '" + line + "': expected sign + or -");
    m.sign = (s == "+") ? 1 : -1;
  };
  if (word == "slide") {
    m.kind = Move::Kind::Slide;
    read_degree();
    read_label(m.a);
    read_label(m.b);
    read_sign();
  } else if (word == "cancel") {
    m.kind = Move::Kind::Cancel;
    read_degree();
    read_label(m.a);
    read_label(m.b);
  } else if (word == "create") {
    m.kind = Move::Kind::CreatePair;
    read_degree();
    read_label(m.a);
    read_label(m.b);
    read_sign();
  } else if (word == "reorient") {
    m.kind = Move::Kind::Reorient;
    read_degree();
    read_label(m.a);
  } else {
    throw SemanticError("unknown move '" + word + "'");
  }
  std::string extra;
  if (in >> extra)
    throw SemanticError("move '" + line + "': trailing token '" + extra + "'");
  return m;
}

HandleDecomposition replay(const MoveJournal& j) {
  HandleDecomposition d = j.initial;
  for (const Move& m : j.moves) d = apply_move(d, m);
  return d;
}

namespace {

struct FuzzReference {
  HomologyProfile integral;
  HomologyProfile mod2;
  long euler;
};

FuzzReference snapshot(const HandleDecomposition& d) {
  return {homology(build_complex(d, SignConvention::GeigesSign,
                                 CoefficientRing::Integers)),
          homology(build_complex(d, SignConvention::GeigesSign,
                                 CoefficientRing::ModTwo)),
          euler_characteristic(d)};
}

// rng() % n is biased by at most 2^-60 for desk-scale n; acceptable for a
// fuzzer and independent of stdlib distribution quirks.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

std::vector<Move> applicable_slides(const HandleDecomposition& d) {
  std::vector<Move> out;
  for (int k = 1; k <= d.dimension; ++k) {
    const auto& hs = d.handles[k];
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = 0; j < hs.size(); ++j)
        if (i != j)
          out.push_back({Move::Kind::Slide, k, hs[i], hs[j], +1});
  }
  return out;
}

std::vector<Move> applicable_cancels(const HandleDecomposition& d) {
  std::vector<Move> out;
  for (int k = 1; k <= d.dimension; ++k) {
    const IntMat& dk = d.boundary_data(k);
    for (std::size_t nu = 0; nu < dk.rows(); ++nu)
      for (std::size_t mu = 0; mu < dk.cols(); ++mu)
        if (dk.at(nu, mu) == 1 || dk.at(nu, mu) == -1)
          out.push_back({Move::Kind::Cancel, k, d.handles[k][mu],
                         d.handles[k - 1][nu], +1});
  }
  return out;
}

std::vector<Move> applicable_reorients(const HandleDecomposition& d) {
  std::vector<Move> out;
  for (int k = 1; k <= d.dimension; ++k)
    for (const std::string& h : d.handles[k])
      out.push_back({Move::Kind::Reorient, k, h, "", +1});
  return out;
}

Move fresh_create(const HandleDecomposition& d, int k, long& counter) {
  for (;; ++counter) {
    std::string a = "cp" + std::to_string(counter) + "a";
    std::string b = "cp" + std::to_string(counter) + "b";
    if (!d.handle_index(k, a) && !d.handle_index(k - 1, b)) {
      ++counter;
      return {Move::Kind::CreatePair, k, a, b, +1};
    }
  }
}

}  // namespace

MoveJournal fuzz_moves(const HandleDecomposition& d, int steps,
                       std::uint64_t seed) {
  require_valid(d);
  MoveJournal journal;
  journal.initial = d;
  journal.result = d;
  if (d.dimension < 1) {
    if (steps > 0)
      throw SemanticError("no moves exist on a 0-dimensional decomposition");
    return journal;
  }

  const FuzzReference reference = snapshot(d);
  std::mt19937_64 rng(seed);
  long create_counter = 0;
  HandleDecomposition current = d;

  for (int step = 0; step < steps; ++step) {
    // Weighted categories: slide 40%, create 20%, cancel 20%, reorient 20%,
    // renormalized over the categories applicable right now. Create is
    // always applicable.
    std::vector<Move> slides = applicable_slides(current);
    std::vector<Move> cancels = applicable_cancels(current);
    std::vector<Move> reorients = applicable_reorients(current);
    unsigned w_slide = slides.empty() ? 0 : 40;
    unsigned w_cancel = cancels.empty() ? 0 : 20;
    unsigned w_reorient = reorients.empty() ? 0 : 20;
    unsigned w_create = 20;
    unsigned total = w_slide + w_cancel + w_reorient + w_create;
    unsigned roll = static_cast<unsigned>(pick(rng, total));

    Move move;
    if (roll < w_slide) {
      move = slides[pick(rng, slides.size())];
      move.sign = pick(rng, 2) == 0 ? 1 : -1;
    } else if (roll < w_slide + w_cancel) {
      move = cancels[pick(rng, cancels.size())];
    } else if (roll < w_slide + w_cancel + w_reorient) {
      move = reorients[pick(rng, reorients.size())];
    } else {
      int k = 1 + static_cast<int>(pick(rng, current.dimension));
      move = fresh_create(current, k, create_counter);
      move.sign = pick(rng, 2) == 0 ? 1 : -1;
    }

    HandleDecomposition next = apply_move(current, move);
    journal.moves.push_back(move);
    journal.result = next;

    FuzzReference now = snapshot(next);
    if (now.integral != reference.integral)
      throw InvarianceViolationError(
          "integral homology changed after step " + std::to_string(step + 1) +
              " (" + format_move(move) + ")",
          journal);
    if (now.mod2 != reference.mod2)
      throw InvarianceViolationError(
          "mod-2 homology changed after step " + std::to_string(step + 1) +
              " (" + format_move(move) + ")",
          journal);
    if (now.euler != reference.euler)
      throw InvarianceViolationError(
          "Euler characteristic changed after step " +
              std::to_string(step + 1) + " (" + format_move(move) + ")",
          journal);
    current = std::move(next);
  }
  return journal;
}

}  // namespace hh
