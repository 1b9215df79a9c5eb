#include "handlehom/textio.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "handlehom/errors.hpp"

namespace hh {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Tokens of one line, comments stripped. Columns are 1-based byte offsets.
std::vector<Token> tokenize_line(const std::string& line, int lineno) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back({line.substr(start, i - start), lineno,
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  return lines;
}

long parse_small_int(const Token& t) {
  try {
    std::size_t used = 0;
    long v = std::stol(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + t.text + "'", t.line,
                     t.column);
  }
}

Int parse_big_int(const Token& t) {
  std::string s = t.text;
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) &&
        !(i == 0 && s[i] == '-'))
      ok = false;
  if (!ok || s == "-")
    throw ParseError("expected an integer, got '" + t.text + "'", t.line,
                     t.column);
  return Int(s);
}

bool is_move_keyword(const std::string& word) {
  return word == "slide" || word == "cancel" || word == "create" ||
         word == "reorient";
}

struct PendingIntersect {
  int degree;
  Token k_label;
  Token km1_label;
  Int value;
};

HandleDecomposition parse_directives(const std::vector<std::string>& lines,
                                     std::vector<Token>* move_lines) {
  bool have_dimension = false, have_relative = false, have_orientation = false;
  HandleDecomposition d;
  std::vector<PendingIntersect> pending;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::vector<Token> tokens = tokenize_line(lines[li], static_cast<int>(li) + 1);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();

    auto expect_count = [&](std::size_t n) {
      if (tokens.size() != n)
        throw ParseError("'" + head.text + "' takes " + std::to_string(n - 1) +
                             " argument(s), got " +
                             std::to_string(tokens.size() - 1),
                         head.line, head.column);
    };

    if (is_move_keyword(head.text)) {
      if (!move_lines)
        throw ParseError("move line '" + head.text +
                             "' not allowed in a decomposition file",
                         head.line, head.column);
      move_lines->push_back({lines[li], head.line, head.column});
      continue;
    }

    if (head.text == "dimension") {
      expect_count(2);
      if (have_dimension)
        throw ParseError("duplicate 'dimension' directive", head.line,
                         head.column);
      long n = parse_small_int(tokens[1]);
      if (n < 0)
        throw ParseError("dimension must be non-negative", tokens[1].line,
                         tokens[1].column);
      d = HandleDecomposition::empty(static_cast<int>(n));
      have_dimension = true;
      continue;
    }
    if (!have_dimension)
      throw ParseError("'dimension' must come first", head.line, head.column);

    if (head.text == "relative") {
      expect_count(2);
      if (have_relative)
        throw ParseError("duplicate 'relative' directive", head.line,
                         head.column);
      if (tokens[1].text == "true")
        d.relative = true;
      else if (tokens[1].text == "false")
        d.relative = false;
      else
        throw ParseError("expected 'true' or 'false', got '" + tokens[1].text +
                             "'",
                         tokens[1].line, tokens[1].column);
      have_relative = true;
    } else if (head.text == "orientation") {
      expect_count(2);
      if (have_orientation)
        throw ParseError("duplicate 'orientation' directive", head.line,
                         head.column);
      const std::string& mode = tokens[1].text;
      if (mode == "oriented")
        d.orientation_mode = OrientationMode::OrientedAmbient;
      else if (mode == "cooriented")
        d.orientation_mode = OrientationMode::Cooriented;
      else if (mode == "mod2")
        d.orientation_mode = OrientationMode::ModTwoOnly;
      else
        throw ParseError(
            "expected 'oriented', 'cooriented' or 'mod2', got '" + mode + "'",
            tokens[1].line, tokens[1].column);
      have_orientation = true;
    } else if (head.text == "handle") {
      expect_count(3);
      long k = parse_small_int(tokens[1]);
      if (k < 0 || k > d.dimension)
        throw SemanticError("line " + std::to_string(head.line) +
                            ": handle degree " + std::to_string(k) +
                            " outside 0.." + std::to_string(d.dimension));
      if (d.handle_index(static_cast<int>(k), tokens[2].text))
        throw SemanticError("line " + std::to_string(head.line) +
                            ": duplicate handle '" + tokens[2].text +
                            "' in degree " + std::to_string(k));
      d.add_handle(static_cast<int>(k), tokens[2].text);
    } else if (head.text == "intersect") {
      expect_count(5);
      long k = parse_small_int(tokens[1]);
      if (k < 1 || k > d.dimension)
        throw SemanticError("line " + std::to_string(head.line) +
                            ": intersect degree " + std::to_string(k) +
                            " outside 1.." + std::to_string(d.dimension));
      pending.push_back({static_cast<int>(k), tokens[2], tokens[3],
                         parse_big_int(tokens[4])});
    } else {
      throw ParseError("unknown directive '" + head.text + "'", head.line,
                       head.column);
    }
  }

  if (!have_dimension) throw ParseError("missing 'dimension' directive", 1, 1);

  // Entries may reference handles declared on any line; resolve at the end.
  std::map<std::tuple<int, std::string, std::string>, int> seen;
  for (const PendingIntersect& p : pending) {
    auto mu = d.handle_index(p.degree, p.k_label.text);
    if (!mu)
      throw SemanticError("line " + std::to_string(p.k_label.line) +
                          ": unknown " + std::to_string(p.degree) +
                          "-handle '" + p.k_label.text + "'");
    auto nu = d.handle_index(p.degree - 1, p.km1_label.text);
    if (!nu)
      throw SemanticError("line " + std::to_string(p.km1_label.line) +
                          ": unknown " + std::to_string(p.degree - 1) +
                          "-handle '" + p.km1_label.text + "'");
    auto key = std::make_tuple(p.degree, p.k_label.text, p.km1_label.text);
    if (!seen.emplace(key, p.k_label.line).second)
      throw SemanticError("line " + std::to_string(p.k_label.line) +
                          ": duplicate intersect entry for (" +
                          p.k_label.text + ", " + p.km1_label.text + ")");
    d.boundary_data(p.degree).at(*nu, *mu) = p.value;
  }
  return d;
}

}  // namespace

HandleDecomposition parse_decomposition(const std::string& text) {
  return parse_directives(split_lines(text), nullptr);
}

std::string serialize_decomposition(const HandleDecomposition& d) {
  std::ostringstream out;
  out << "dimension " << d.dimension << "\n";
  out << "relative " << (d.relative ? "true" : "false") << "\n";
  out << "orientation " << to_string(d.orientation_mode) << "\n";
  for (int k = 0; k <= d.dimension; ++k) {
    std::vector<std::string> labels = d.handles[k];
    std::sort(labels.begin(), labels.end());
    for (const std::string& label : labels)
      out << "handle " << k << " " << label << "\n";
  }
  for (int k = 1; k <= d.dimension; ++k) {
    const IntMat& m = d.boundary_data(k);
    std::vector<std::tuple<std::string, std::string, Int>> entries;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != 0)
          entries.emplace_back(d.handles[k - 1][i], d.handles[k][j],
                               m.at(i, j));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) {
                return std::tie(std::get<0>(a), std::get<1>(a)) <
                       std::tie(std::get<0>(b), std::get<1>(b));
              });
    for (const auto& [nu, mu, value] : entries)
      out << "intersect " << k << " " << mu << " " << nu << " "
          << value.get_str() << "\n";
  }
  return out.str();
}

std::string serialize_journal(const MoveJournal& j) {
  std::ostringstream out;
  out << serialize_decomposition(j.initial);
  for (const Move& m : j.moves) out << format_move(m) << "\n";
  return out.str();
}

MoveJournal parse_journal(const std::string& text) {
  std::vector<Token> move_lines;
  MoveJournal j;
  j.initial = parse_directives(split_lines(text), &move_lines);
  for (const Token& t : move_lines) {
    // Strip comments before handing the line to the move parser.
    std::vector<Token> tokens = tokenize_line(t.text, t.line);
    std::string clean;
    for (const Token& tok : tokens) {
      if (!clean.empty()) clean += " ";
      clean += tok.text;
    }
    try {
      j.moves.push_back(parse_move(clean));
    } catch (const SemanticError& e) {
      throw SemanticError("line " + std::to_string(t.line) + ": " + e.what());
    }
  }
  j.result = replay(j);
  return j;
}

}  // namespace hh
