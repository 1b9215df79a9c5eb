#include "handlehom/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "handlehom/errors.hpp"

namespace hh {

HandleDecomposition HandleDecomposition::empty(int dimension) {
  HandleDecomposition d;
  d.dimension = dimension;
  d.handles.resize(dimension + 1);
  for (int k = 1; k <= dimension; ++k) d.intersections.emplace_back(0, 0);
  return d;
}

int HandleDecomposition::handle_count(int k) const {
  if (k < 0 || k > dimension) return 0;
  return static_cast<int>(handles[k].size());
}

const IntMat& HandleDecomposition::boundary_data(int k) const {
  if (k < 1 || k > dimension)
    throw IndexOutOfRangeError("no boundary data in degree " +
                               std::to_string(k));
  return intersections[k - 1];
}

IntMat& HandleDecomposition::boundary_data(int k) {
  if (k < 1 || k > dimension)
    throw IndexOutOfRangeError("no boundary data in degree " +
                               std::to_string(k));
  return intersections[k - 1];
}

std::optional<std::size_t> HandleDecomposition::handle_index(
    int k, const std::string& label) const {
  if (k < 0 || k > dimension) return std::nullopt;
  auto it = std::find(handles[k].begin(), handles[k].end(), label);
  if (it == handles[k].end()) return std::nullopt;
  return static_cast<std::size_t>(it - handles[k].begin());
}

namespace {

IntMat grow_rows(const IntMat& m) {
  IntMat out(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

IntMat grow_cols(const IntMat& m) {
  IntMat out(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace

std::size_t HandleDecomposition::add_handle(int k, const std::string& label) {
  if (k < 0 || k > dimension)
    throw IndexOutOfRangeError("handle degree " + std::to_string(k) +
                               " out of range");
  if (handle_index(k, label))
    throw DuplicateLabelError("label '" + label + "' already used in degree " +
                              std::to_string(k));
  handles[k].push_back(label);
  if (k >= 1) boundary_data(k) = grow_cols(boundary_data(k));
  if (k + 1 <= dimension) boundary_data(k + 1) = grow_rows(boundary_data(k + 1));
  return handles[k].size() - 1;
}

void HandleDecomposition::remove_handle(int k, std::size_t index) {
  if (k < 0 || k > dimension || index >= handles[k].size())
    throw IndexOutOfRangeError("no handle at degree " + std::to_string(k) +
                               " index " + std::to_string(index));
  handles[k].erase(handles[k].begin() + index);
  if (k >= 1) boundary_data(k) = boundary_data(k).delete_col(index);
  if (k + 1 <= dimension)
    boundary_data(k + 1) = boundary_data(k + 1).delete_row(index);
}

bool HandleDecomposition::operator==(const HandleDecomposition& other) const {
  if (dimension != other.dimension || relative != other.relative ||
      orientation_mode != other.orientation_mode)
    return false;
  for (int k = 0; k <= dimension; ++k) {
    auto a = handles[k];
    auto b = other.handles[k];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  auto entries = [](const HandleDecomposition& d) {
    std::map<std::tuple<int, std::string, std::string>, Int> out;
    for (int k = 1; k <= d.dimension; ++k) {
      const IntMat& m = d.boundary_data(k);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (m.at(i, j) != 0)
            out[{k, d.handles[k - 1][i], d.handles[k][j]}] = m.at(i, j);
    }
    return out;
  };
  return entries(*this) == entries(other);
}

IntMat ChainComplex::boundary(int k) const {
  const int n = top_degree();
  if (k >= 1 && k <= n) return boundaries[k - 1];
  std::size_t rows = (k >= 1 && k - 1 <= n) ? ranks[k - 1] : 0;
  std::size_t cols = (k >= 0 && k <= n) ? ranks[k] : 0;
  return IntMat(rows, cols);
}

const char* violation_name(Violation::Code code) {
  switch (code) {
    case Violation::Code::BadDimension: return "BadDimension";
    case Violation::Code::EmptyLabel: return "EmptyLabel";
    case Violation::Code::BadLabel: return "BadLabel";
    case Violation::Code::DuplicateLabel: return "DuplicateLabel";
    case Violation::Code::ShapeMismatch: return "ShapeMismatch";
    case Violation::Code::NonBinaryModTwoEntry: return "NonBinaryModTwoEntry";
    case Violation::Code::InconsistentBoundary: return "InconsistentBoundary";
  }
  return "?";
}

namespace {

bool label_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '#' || std::isspace(static_cast<unsigned char>(c)) ||
        !std::isprint(static_cast<unsigned char>(c)))
      return false;
  return true;
}

void check_structure(const HandleDecomposition& d, ValidationReport& report) {
  auto add = [&](Violation::Code code, std::string msg) {
    report.violations.push_back({code, std::move(msg)});
  };
  if (d.dimension < 0) {
    add(Violation::Code::BadDimension,
        "dimension must be non-negative, got " + std::to_string(d.dimension));
    return;
  }
  if (static_cast<int>(d.handles.size()) != d.dimension + 1) {
    add(Violation::Code::ShapeMismatch,
        "expected " + std::to_string(d.dimension + 1) +
            " handle degrees, got " + std::to_string(d.handles.size()));
    return;
  }
  if (static_cast<int>(d.intersections.size()) != d.dimension) {
    add(Violation::Code::ShapeMismatch,
        "expected " + std::to_string(d.dimension) +
            " intersection matrices, got " +
            std::to_string(d.intersections.size()));
    return;
  }
  for (int k = 0; k <= d.dimension; ++k) {
    report.handle_counts.push_back(d.handles[k].size());
    std::set<std::string> seen;
    for (const std::string& label : d.handles[k]) {
      if (label.empty())
        add(Violation::Code::EmptyLabel,
            "empty label in degree " + std::to_string(k));
      else if (!label_ok(label))
        add(Violation::Code::BadLabel,
            "label '" + label + "' in degree " + std::to_string(k) +
                " contains whitespace or '#'");
      if (!seen.insert(label).second)
        add(Violation::Code::DuplicateLabel,
            "label '" + label + "' repeated in degree " + std::to_string(k));
    }
  }
  for (int k = 1; k <= d.dimension; ++k) {
    const IntMat& m = d.boundary_data(k);
    if (m.rows() != d.handles[k - 1].size() || m.cols() != d.handles[k].size())
      add(Violation::Code::ShapeMismatch,
          "D_" + std::to_string(k) + " has shape " + std::to_string(m.rows()) +
              "x" + std::to_string(m.cols()) + ", expected " +
              std::to_string(d.handles[k - 1].size()) + "x" +
              std::to_string(d.handles[k].size()));
    if (d.orientation_mode == OrientationMode::ModTwoOnly)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (m.at(i, j) != 0 && m.at(i, j) != 1)
            add(Violation::Code::NonBinaryModTwoEntry,
                "mod-2 decomposition has entry " + m.at(i, j).get_str() +
                    " at D_" + std::to_string(k) + "(" + d.handles[k - 1][i] +
                    ", " + d.handles[k][j] + ")");
  }
}

// First nonzero entry of D_k * D_{k+1}, reported by generator labels.
std::optional<InconsistentBoundaryError> boundary_defect(
    const HandleDecomposition& d) {
  for (int k = 1; k + 1 <= d.dimension; ++k) {
    IntMat prod = matmul(d.boundary_data(k), d.boundary_data(k + 1));
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (prod.at(i, j) != 0)
          return InconsistentBoundaryError(k, d.handles[k - 1][i],
                                           d.handles[k + 1][j]);
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate(const HandleDecomposition& d) {
  ValidationReport report;
  check_structure(d, report);
  if (!report.ok()) return report;
  if (auto defect = boundary_defect(d))
    report.violations.push_back(
        {Violation::Code::InconsistentBoundary, defect->what()});
  return report;
}

void require_valid(const HandleDecomposition& d) {
  ValidationReport structural;
  check_structure(d, structural);
  for (const Violation& v : structural.violations) {
    switch (v.code) {
      case Violation::Code::DuplicateLabel:
        throw DuplicateLabelError(v.message);
      case Violation::Code::ShapeMismatch:
        throw ShapeError(v.message);
      default:
        throw SemanticError(v.message);
    }
  }
  if (auto defect = boundary_defect(d)) throw *defect;
}

ChainComplex build_complex(const HandleDecomposition& d, SignConvention s,
                           CoefficientRing ring) {
  require_valid(d);
  ChainComplex c;
  c.ring = ring;
  c.generator_labels = d.handles;
  for (int k = 0; k <= d.dimension; ++k) c.ranks.push_back(d.handles[k].size());
  for (int k = 1; k <= d.dimension; ++k) {
    IntMat m = d.boundary_data(k);
    if (s == SignConvention::GeigesSign && k % 2 == 0) m = m.negated();
    if (ring == CoefficientRing::ModTwo) m = m.reduced_mod2();
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

std::string to_string(OrientationMode mode) {
  switch (mode) {
    case OrientationMode::OrientedAmbient: return "oriented";
    case OrientationMode::Cooriented: return "cooriented";
    case OrientationMode::ModTwoOnly: return "mod2";
  }
  return "?";
}

std::string to_string(SignConvention s) {
  return s == SignConvention::GeigesSign ? "geiges" : "plain";
}

std::string to_string(CoefficientRing ring) {
  return ring == CoefficientRing::Integers ? "Z" : "Z/2";
}

}  // namespace hh
