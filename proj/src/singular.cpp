#include "artinres/singular.hpp"

#include <sstream>

#include "artinres/error.hpp"
#include "artinres/linalg.hpp"

namespace artinres {

namespace {

using Vec = std::vector<Scalar>;

Vec jet_product(const Vec& a, const Vec& b, int branches, int n, Field field) {
  Vec out(a.size(), Scalar(field));
  for (int br = 0; br < branches; ++br) {
    const std::size_t base = static_cast<std::size_t>(br) * n;
    for (int i = 0; i < n; ++i) {
      if (a[base + i].is_zero()) continue;
      for (int j = 0; i + j < n; ++j) out[base + i + j] += a[base + i] * b[base + j];
    }
  }
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

SingularityPresentation SingularityPresentation::from_conditions(Field field, int branches, int jet_order,
                                                                 std::vector<Functional> conditions) {
  if (branches < 1 || jet_order < 1) fail(ErrorKind::InvalidArgument, "need at least one branch and jet order");
  int max_degree = 0;
  for (const auto& f : conditions) {
    for (const auto& [key, c] : f) {
      if (key.first < 0 || key.first >= branches || key.second < 0) {
        fail(ErrorKind::InvalidArgument, "functional refers to a missing coordinate");
      }
      max_degree = std::max(max_degree, key.second);
    }
  }
  // Canonicalize by row reduction over the coordinates used.
  const int width = max_degree + 1;
  linalg::Matrix m(field, 0, static_cast<std::size_t>(branches * width));
  for (const auto& f : conditions) {
    Vec row(m.cols(), Scalar(field));
    for (const auto& [key, c] : f) row[static_cast<std::size_t>(key.first * width + key.second)] += c;
    m.append_row(row);
  }
  linalg::row_reduce(m);

  SingularityPresentation p;
  p.field_ = field;
  p.branches_ = branches;
  p.jet_order_ = jet_order;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Functional f;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).is_zero()) f.emplace(std::make_pair(int(c) / width, int(c) % width), m.at(r, c));
    }
    p.conditions_.push_back(std::move(f));
  }
  return p;
}

SingularityPresentation SingularityPresentation::from_generators(Field field, int branches, int jet_order,
                                                                 std::vector<BranchJet> generators) {
  if (branches < 1 || jet_order < 1) fail(ErrorKind::InvalidArgument, "need at least one branch and jet order");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != branches) fail(ErrorKind::InvalidArgument, "generator has wrong branch count");
  }
  SingularityPresentation p;
  p.field_ = field;
  p.branches_ = branches;
  p.jet_order_ = jet_order;
  p.by_generators_ = true;
  p.generators_ = std::move(generators);
  return p;
}

SingularityPresentation SingularityPresentation::with_jet_order(int n) const {
  SingularityPresentation p(*this);
  p.jet_order_ = n;
  return p;
}

std::size_t SingularityPresentation::subalgebra_dimension(int n) const {
  const std::size_t dim = static_cast<std::size_t>(branches_) * n;
  auto index = [n](int branch, int degree) { return static_cast<std::size_t>(branch * n + degree); };

  linalg::Matrix span(field_, 0, dim);
  Vec one(dim, Scalar(field_));
  for (int b = 0; b < branches_; ++b) one[index(b, 0)] = Scalar(field_, 1);
  span.append_row(one);

  if (by_generators_) {
    for (const auto& g : generators_) {
      Vec v(dim, Scalar(field_));
      for (int b = 0; b < branches_; ++b) {
        for (const auto& [deg, c] : g[b]) {
          if (deg < n) v[index(b, deg)] += c;
        }
      }
      span.append_row(v);
    }
  } else {
    linalg::Matrix conds(field_, 0, dim);
    for (int b = 1; b < branches_; ++b) {
      Vec row(dim, Scalar(field_));
      row[index(0, 0)] = Scalar(field_, 1);
      row[index(b, 0)] = Scalar(field_, -1);
      conds.append_row(row);
    }
    for (const auto& f : conditions_) {
      Vec row(dim, Scalar(field_));
      for (const auto& [key, c] : f) {
        if (key.second >= n) {
          fail(ErrorKind::NotStabilized, "a condition involves degree " + std::to_string(key.second) +
                                             ", beyond jet order " + std::to_string(n));
        }
        row[index(key.first, key.second)] += c;
      }
      conds.append_row(row);
    }
    for (auto& v : linalg::kernel(conds)) span.append_row(v);
  }

  // Close under products.
  std::size_t rank = 0;
  while (true) {
    linalg::row_reduce(span);
    if (span.rows() == rank) break;
    rank = span.rows();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < span.rows(); ++i) rows.push_back(span.row(i));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i; j < rows.size(); ++j) {
        Vec prod = jet_product(rows[i], rows[j], branches_, n, field_);
        if (!is_zero_vec(prod)) span.append_row(prod);
      }
    }
  }
  return rank;
}

std::string SingularityPresentation::to_string() const {
  std::ostringstream os;
  os << branches_ << " branch" << (branches_ == 1 ? "" : "es") << " over " << field_.name() << ", jet order "
     << jet_order_;
  if (by_generators_) {
    os << ", " << generators_.size() << " generators";
  } else {
    os << ", " << conditions_.size() << " conditions";
  }
  return os.str();
}

int delta_invariant(const SingularityPresentation& p) {
  const int n = p.jet_order();
  const long here = static_cast<long>(p.branches()) * n - static_cast<long>(p.subalgebra_dimension(n));
  const long next = static_cast<long>(p.branches()) * (n + 1) - static_cast<long>(p.subalgebra_dimension(n + 1));
  if (here != next) {
    fail(ErrorKind::NotStabilized, "delta is " + std::to_string(here) + " at jet order " + std::to_string(n) +
                                       " and " + std::to_string(next) + " at " + std::to_string(n + 1));
  }
  return static_cast<int>(here);
}

int branch_count(const SingularityPresentation& p) { return p.branches(); }

int genus(const SingularityPresentation& p) { return delta_invariant(p) - branch_count(p) + 1; }

std::string SingularityReport::class_name() const {
  switch (cls) {
    case GenusOneClass::Cusp: return "cusp";
    case GenusOneClass::Tacnode: return "tacnode";
    case GenusOneClass::Lines: return std::to_string(m) + "-lines";
    case GenusOneClass::NotGenusOne: return "not-genus-one";
  }
  return "not-genus-one";
}

std::string SingularityReport::model() const {
  switch (cls) {
    case GenusOneClass::Cusp: return "V(y^2-x^3)";
    case GenusOneClass::Tacnode: return "V(y^2-yx^2)";
    case GenusOneClass::Lines:
      return "union of " + std::to_string(m) + " general lines through the origin in A^" + std::to_string(m - 1);
    case GenusOneClass::NotGenusOne: return "";
  }
  return "";
}

SingularityReport classify_genus_one(const SingularityPresentation& p) {
  SingularityReport r;
  r.m = branch_count(p);
  r.delta = delta_invariant(p);
  r.genus = r.delta - r.m + 1;
  r.jet_order = p.jet_order();
  if (r.genus == 1) {
    r.cls = r.m == 1 ? GenusOneClass::Cusp : r.m == 2 ? GenusOneClass::Tacnode : GenusOneClass::Lines;
  }
  return r;
}

SingularityPresentation node_presentation(Field field, int jet_order) {
  return SingularityPresentation::from_conditions(field, 2, jet_order, {});
}

SingularityPresentation lines_presentation(Field field, int n, int jet_order) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "the lines model needs at least three lines");
  // Lines along e_1..e_{n-1} and e_1 + ... + e_{n-1}; generator j is the
  // coordinate y_j restricted to each line.
  std::vector<BranchJet> gens;
  for (int j = 0; j < n - 1; ++j) {
    BranchJet g(static_cast<std::size_t>(n));
    g[static_cast<std::size_t>(j)][1] = Scalar(field, 1);
    g[static_cast<std::size_t>(n - 1)][1] = Scalar(field, 1);
    gens.push_back(std::move(g));
  }
  return SingularityPresentation::from_generators(field, n, jet_order, std::move(gens));
}

}  // namespace artinres
