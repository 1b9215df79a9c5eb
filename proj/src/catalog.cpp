#include "handlehom/catalog.hpp"

namespace hh {

namespace {

HomologyProfile integral_profile(std::vector<AbelianGroup> groups) {
  HomologyProfile p;
  p.ring = CoefficientRing::Integers;
  long chi = 0;
  int k = 0;
  for (const AbelianGroup& g : groups) {
    p.betti.push_back(g.free_rank);
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(g.free_rank);
    ++k;
  }
  p.euler = chi;
  p.groups = std::move(groups);
  return p;
}

HomologyProfile mod2_profile(std::vector<std::size_t> dims) {
  HomologyProfile p;
  p.ring = CoefficientRing::ModTwo;
  long chi = 0;
  int k = 0;
  for (std::size_t dim : dims) {
    AbelianGroup g;
    g.torsion.assign(dim, Int(2));
    p.groups.push_back(std::move(g));
    p.betti.push_back(dim);
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
    ++k;
  }
  p.euler = chi;
  return p;
}

AbelianGroup Z(std::size_t rank = 1) { return {rank, {}}; }
AbelianGroup Zmod(long t) { return {0, {Int(t)}}; }
AbelianGroup trivial() { return {0, {}}; }
AbelianGroup Z_plus_Zmod(std::size_t rank, long t) { return {rank, {Int(t)}}; }

CatalogEntry sphere(int n) {
  CatalogEntry e;
  e.name = "S" + std::to_string(n);
  e.decomposition = HandleDecomposition::empty(n);
  e.decomposition.handles[0].push_back("h0");
  e.decomposition.handles[n].push_back("hn");
  for (int k = 1; k <= n; ++k) {
    std::size_t rows = e.decomposition.handles[k - 1].size();
    std::size_t cols = e.decomposition.handles[k].size();
    e.decomposition.boundary_data(k) = IntMat(rows, cols);
  }
  std::vector<AbelianGroup> groups(n + 1, trivial());
  groups[0] = Z();
  groups[n] = Z();
  e.expected_integral = integral_profile(std::move(groups));
  std::vector<std::size_t> dims(n + 1, 0);
  dims[0] = 1;
  dims[n] = 1;
  e.expected_mod2 = mod2_profile(std::move(dims));
  e.orientable = true;
  e.notes = "standard two-handle sphere, all boundary data zero";
  return e;
}

CatalogEntry surface(const std::string& name, int genus,
                     const std::string& notes) {
  CatalogEntry e;
  e.name = name;
  HandleDecomposition d = HandleDecomposition::empty(2);
  d.handles[0].push_back("h0");
  for (int i = 1; i <= 2 * genus; ++i)
    d.handles[1].push_back("e" + std::to_string(i));
  d.handles[2].push_back("h2");
  d.boundary_data(1) = IntMat(1, 2 * genus);
  d.boundary_data(2) = IntMat(2 * genus, 1);
  e.decomposition = std::move(d);
  e.expected_integral =
      integral_profile({Z(), Z(2 * genus), Z()});
  e.expected_mod2 =
      mod2_profile({1, static_cast<std::size_t>(2 * genus), 1});
  e.orientable = true;
  e.notes = notes;
  return e;
}

CatalogEntry real_projective_plane() {
  CatalogEntry e;
  e.name = "RP2";
  HandleDecomposition d = HandleDecomposition::empty(2);
  d.orientation_mode = OrientationMode::Cooriented;
  d.handles[0].push_back("h0");
  d.handles[1].push_back("h1");
  d.handles[2].push_back("h2");
  d.boundary_data(1) = IntMat(1, 1);
  d.boundary_data(2) = IntMat::from_rows({{2}});
  e.decomposition = std::move(d);
  e.expected_integral = integral_profile({Z(), Zmod(2), trivial()});
  e.expected_mod2 = mod2_profile({1, 1, 1});
  e.orientable = false;
  e.notes = "one handle per index; the 2-handle runs twice over the 1-handle";
  return e;
}

CatalogEntry klein_bottle() {
  CatalogEntry e;
  e.name = "Klein";
  HandleDecomposition d = HandleDecomposition::empty(2);
  d.orientation_mode = OrientationMode::Cooriented;
  d.handles[0].push_back("h0");
  d.handles[1] = {"a", "b"};
  d.handles[2].push_back("h2");
  d.boundary_data(1) = IntMat(1, 2);
  d.boundary_data(2) = IntMat::from_rows({{0}, {2}});
  e.decomposition = std::move(d);
  e.expected_integral = integral_profile({Z(), Z_plus_Zmod(1, 2), trivial()});
  e.expected_mod2 = mod2_profile({1, 2, 1});
  e.orientable = false;
  e.notes = "orientable glue on a, orientation-reversing glue on b";
  return e;
}

CatalogEntry real_projective_space_3() {
  CatalogEntry e;
  e.name = "RP3";
  HandleDecomposition d = HandleDecomposition::empty(3);
  d.handles[0].push_back("h0");
  d.handles[1].push_back("h1");
  d.handles[2].push_back("h2");
  d.handles[3].push_back("h3");
  d.boundary_data(1) = IntMat(1, 1);
  d.boundary_data(2) = IntMat::from_rows({{2}});
  d.boundary_data(3) = IntMat(1, 1);
  e.decomposition = std::move(d);
  e.expected_integral = integral_profile({Z(), Zmod(2), trivial(), Z()});
  e.expected_mod2 = mod2_profile({1, 1, 1, 1});
  e.orientable = true;
  e.notes = "genus-1 Heegaard decomposition";
  return e;
}

CatalogEntry lens_space(int p) {
  CatalogEntry e;
  e.name = "L(" + std::to_string(p) + ",1)";
  HandleDecomposition d = HandleDecomposition::empty(3);
  d.handles[0].push_back("h0");
  d.handles[1].push_back("h1");
  d.handles[2].push_back("h2");
  d.handles[3].push_back("h3");
  d.boundary_data(1) = IntMat(1, 1);
  d.boundary_data(2) = IntMat::from_rows({{p}});
  d.boundary_data(3) = IntMat(1, 1);
  e.decomposition = std::move(d);
  e.expected_integral = integral_profile({Z(), Zmod(p), trivial(), Z()});
  e.expected_mod2 = mod2_profile({1, 0, 0, 1});  // p odd
  e.orientable = true;
  e.notes = "chain-level model: the 2-handle wraps p times over the 1-handle";
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  for (int n = 1; n <= 5; ++n) entries.push_back(sphere(n));
  entries.push_back(surface("T2", 1, "torus, standard 0/1/1/2 handles"));
  entries.push_back(surface("Sigma2", 2, "closed orientable surface, genus 2"));
  entries.push_back(surface("Sigma3", 3, "closed orientable surface, genus 3"));
  entries.push_back(real_projective_plane());
  entries.push_back(klein_bottle());
  entries.push_back(real_projective_space_3());
  entries.push_back(lens_space(3));
  entries.push_back(lens_space(5));
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<CatalogEntry> catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace hh
