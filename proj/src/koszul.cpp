#include "qdc/koszul.hpp"

#include <algorithm>
#include <sstream>

namespace qdc {

namespace {

ClassVec subset_sum(const std::vector<ClassVec>& h, const std::vector<int>& s, Index rank) {
  ClassVec out = ClassVec::Constant(rank, Rational(0));
  for (int i : s) out += h[std::size_t(i - 1)];
  return out;
}

std::vector<std::vector<int>> nonempty_subsets(int k) {
  std::vector<std::vector<int>> out;
  for (unsigned bits = 1; bits < (1u << k); ++bits) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (bits & (1u << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return out;
}

std::string term_label(const std::vector<int>& s) {
  std::string out = "N l";
  for (int i : s) out += " - h" + std::to_string(i);
  return out;
}

}  // namespace

void validate(const DivisorConfig& cfg) {
  const H2Lattice& l = cfg.lattice;
  validate_cone(l, cfg.cone);
  if (cfg.n < 1) throw std::invalid_argument("quaternionic dimension must be >= 1");
  if (cfg.N < 1) throw std::invalid_argument("N must be a positive integer");
  if (!q_eval(l, cfg.l, cfg.l).is_zero()) throw std::invalid_argument("q(l, l) must be 0");
  for (std::size_t g = 0; g < cfg.cone.generators.size(); ++g)
    if (q_eval(l, cfg.l, cfg.cone.generators[g]) < 0)
      throw std::invalid_argument("l is not nef: q(l, g" + std::to_string(g + 1) + ") < 0");
  for (std::size_t i = 0; i < cfg.h.size(); ++i) {
    const std::string name = "h" + std::to_string(i + 1);
    if (q_eval(l, cfg.h[i], cfg.h[i]) <= 0) throw std::invalid_argument("q(" + name + ", " + name + ") <= 0");
    for (std::size_t g = 0; g < cfg.cone.generators.size(); ++g)
      if (q_eval(l, cfg.h[i], cfg.cone.generators[g]) <= 0)
        throw std::invalid_argument(name + " is not ample: q(" + name + ", g" + std::to_string(g + 1) +
                                    ") <= 0");
    if (q_eval(l, cfg.l, cfg.h[i]) <= 0) throw std::invalid_argument("q(l, " + name + ") <= 0");
  }
}

std::vector<KoszulTerm> koszul_terms(const DivisorConfig& cfg) {
  validate(cfg);
  const Index r = cfg.lattice.rank();
  std::vector<KoszulTerm> out;
  for (auto& s : nonempty_subsets(int(cfg.h.size())))
    out.push_back({s, ClassVec(Rational(cfg.N) * cfg.l - subset_sum(cfg.h, s, r))});
  out.push_back({{}, ClassVec(Rational(cfg.N) * cfg.l)});
  return out;
}

Rational n0_threshold(const H2Lattice& lattice, const ClassVec& l, const std::vector<ClassVec>& h) {
  Rational best = 0;
  for (const auto& s : nonempty_subsets(int(h.size()))) {
    const ClassVec hs = subset_sum(h, s, lattice.rank());
    const Rational qlh = q_eval(lattice, l, hs);
    if (qlh <= 0) throw std::invalid_argument("q(l, h_S) <= 0 for S = {" + term_label(s).substr(4) + "}");
    best = std::max(best, Rational(q_eval(lattice, hs, hs) / qlh));
  }
  return best;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Surjective:
      return "Surjective";
    case Verdict::Inconclusive:
      return "Inconclusive";
    case Verdict::NotApplicable:
      return "NotApplicable";
  }
  return "?";
}

SpectralGrid vanishing_grid(const DivisorConfig& cfg) {
  validate(cfg);
  const H2Lattice& lat = cfg.lattice;
  SpectralGrid grid;
  grid.n = cfg.n;
  grid.n0 = n0_threshold(lat, cfg.l, cfg.h);
  if (Rational(cfg.N) <= grid.n0)
    throw BelowThreshold("below threshold: N = " + std::to_string(cfg.N) + " <= N0 = " + to_string(grid.n0));
  const Rational eps = Rational(1, cfg.N);
  ConeSpec base = cfg.cone;
  for (const auto& h : cfg.h) base.generators.push_back(h);
  for (const auto& term : koszul_terms(cfg)) {
    GridColumn col;
    col.label = term_label(term.subset);
    col.subset = term.subset;
    ConeSpec cone = base;
    if (!term.subset.empty()) {
      // N l - h_S = N (l - eps h_S); l + delta h_S is Kähler and pairs negatively with it.
      const ClassVec hs = subset_sum(cfg.h, term.subset, lat.rank());
      const NefPerturbation np = nef_perturbation(lat, cfg.l, hs, eps);
      cone.generators.push_back(hs);
      cone.generators.push_back(np.kahler);
      std::ostringstream j;
      j << "q(c1, h_S) = " << to_string(Rational(cfg.N) * np.lambda) << " > 0, q(c1, l + "
        << to_string(np.delta) << " h_S) = " << to_string(Rational(cfg.N) * np.q_kahler_shifted) << " < 0";
      col.justification = j.str();
    } else {
      col.justification = "nef class: pairings with the cone are >= 0";
    }
    col.report = classify(lat, cone, term.cls, cfg.n);
    col.justification = to_string(col.report->which) + "; " + col.justification;
    for (int row = 0; row <= cfg.n; ++row)
      col.cells.push_back(col.report->vanishes(row) ? Cell::Zero : Cell::PossiblyNonzero);
    grid.columns.push_back(std::move(col));
  }
  GridColumn res;
  res.label = "L^N|_X";
  res.restriction = true;
  res.cells.assign(std::size_t(cfg.n + 1), Cell::Input);
  res.justification = "restriction term, not computed";
  grid.columns.push_back(std::move(res));
  return grid;
}

std::string SpectralGrid::render() const {
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(std::max<std::size_t>(c.label.size(), 1));
  std::ostringstream out;
  auto cell = [](Cell c) { return c == Cell::Zero ? "0" : (c == Cell::Input ? "?" : "*"); };
  for (int row = n; row >= 0; --row) {
    out << "H^" << row << " |";
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const std::string s = cell(columns[k].cells[std::size_t(row)]);
      out << ' ' << std::string(width[k] - s.size(), ' ') << s << " |";
    }
    out << '\n';
  }
  out << "     |";
  for (std::size_t k = 0; k < columns.size(); ++k) out << ' ' << columns[k].label << " |";
  out << '\n';
  return out.str();
}

SurjectivityReport surjectivity_verdict(const DivisorConfig& cfg) {
  validate(cfg);
  SurjectivityReport r;
  const int k = int(cfg.h.size());
  r.qualifier = "for a bundle B of higher rank: same zero set for N > N0(B); N0(B) not computed";
  if (k >= cfg.n) {
    r.verdict = Verdict::NotApplicable;
    r.explanation = "k = " + std::to_string(k) + " >= n = " + std::to_string(cfg.n) +
                    ": the complete intersection has dimension 2n - k <= n";
    return r;
  }
  r.grid = vanishing_grid(cfg);
  bool ok = true;
  for (const auto& col : r.grid->columns) {
    if (col.subset.empty()) continue;
    // H^{|S|} of the column S must vanish; rows 0..k cover it and the lower rows.
    std::string rows;
    for (int row = 0; row <= k; ++row) {
      const bool zero = col.cells[std::size_t(row)] == Cell::Zero;
      ok = ok && zero;
      rows += (row ? "," : "") + std::to_string(row) + (zero ? "" : "(not zero)");
    }
    r.trace.push_back(col.label + ": rows " + rows + " by " + col.justification);
  }
  r.verdict = ok ? Verdict::Surjective : Verdict::Inconclusive;
  r.explanation = ok ? "all differentials into H^0 of the restriction vanish except the restriction map"
                     : "some obstruction cell is not forced to vanish";
  return r;
}

}  // namespace qdc
