#include "artinres/artin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "artinres/error.hpp"
#include "artinres/linalg.hpp"

namespace artinres {

struct RingDescriptor::Data {
  Field field;
  std::vector<std::string> vars;
  std::vector<Exponents> ideal;
  std::vector<Exponents> basis;
  std::vector<int> degrees;
  std::map<Exponents, std::size_t> index;
  std::vector<int> products;  // dim * dim
  int nilpotency = 1;
};

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<std::string> default_names(std::size_t r) {
  static const char* kShort[] = {"u", "v", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i) {
    names.push_back(r <= 3 ? std::string(kShort[i]) : "u" + std::to_string(i + 1));
  }
  return names;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]);
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  return minimal;
}

}  // namespace

RingDescriptor RingDescriptor::make(Field field, std::vector<std::string> vars, std::vector<Exponents> ideal) {
  const std::size_t r = vars.size();
  for (const auto& g : ideal) {
    if (g.size() != r) fail(ErrorKind::InvalidArgument, "ideal generator has wrong number of exponents");
    for (int e : g) {
      if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent in ideal generator");
    }
  }
  auto data = std::make_shared<Data>();
  data->field = field;
  data->vars = std::move(vars);
  data->ideal = minimalize(std::move(ideal));

  auto in_ideal = [&](const Exponents& m) {
    return std::any_of(data->ideal.begin(), data->ideal.end(), [&](const Exponents& g) { return divides(g, m); });
  };

  // Every variable needs a pure power in I.
  std::vector<int> bound(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& g : data->ideal) {
      bool pure = true;
      for (std::size_t j = 0; j < r; ++j) pure = pure && (j == i || g[j] == 0);
      if (pure && (bound[i] == 0 || g[i] < bound[i])) bound[i] = g[i];
    }
    if (bound[i] == 0) {
      fail(ErrorKind::NotArtinian, "no power of " + data->vars[i] + " lies in the ideal");
    }
  }
  if (in_ideal(Exponents(r, 0))) {
    fail(ErrorKind::InvalidArgument, "the ideal is the unit ideal");
  }

  // Enumerate the box [0, bound) and keep standard monomials.
  Exponents e(r, 0);
  while (true) {
    if (!in_ideal(e)) data->basis.push_back(e);
    std::size_t i = 0;
    while (i < r && ++e[i] == bound[i]) e[i++] = 0;
    if (i == r) break;
  }
  std::stable_sort(data->basis.begin(), data->basis.end(), [](const Exponents& a, const Exponents& b) {
    const int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a > b;
  });
  for (std::size_t i = 0; i < data->basis.size(); ++i) {
    data->index[data->basis[i]] = i;
    data->degrees.push_back(total_degree(data->basis[i]));
  }
  data->nilpotency = data->degrees.back() + 1;

  const std::size_t dim = data->basis.size();
  data->products.assign(dim * dim, -1);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Exponents prod(r);
      for (std::size_t k = 0; k < r; ++k) prod[k] = data->basis[i][k] + data->basis[j][k];
      auto it = data->index.find(prod);
      if (it != data->index.end()) data->products[i * dim + j] = static_cast<int>(it->second);
    }
  }
  return RingDescriptor(std::move(data));
}

RingDescriptor RingDescriptor::make(Field field, std::size_t num_vars, std::vector<Exponents> ideal) {
  return make(field, default_names(num_vars), std::move(ideal));
}

RingDescriptor RingDescriptor::truncated_polynomial(Field field, int n, std::string var) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "k[u]/(u^n) needs n >= 1");
  return make(field, std::vector<std::string>{std::move(var)}, {Exponents{n}});
}

RingDescriptor RingDescriptor::residue_field(Field field) { return make(field, std::vector<std::string>{}, {}); }

Field RingDescriptor::field() const { return data_->field; }
std::size_t RingDescriptor::num_vars() const { return data_->vars.size(); }
const std::vector<std::string>& RingDescriptor::var_names() const { return data_->vars; }
const std::vector<Exponents>& RingDescriptor::ideal() const { return data_->ideal; }
std::size_t RingDescriptor::dimension() const { return data_->basis.size(); }
const std::vector<Exponents>& RingDescriptor::basis() const { return data_->basis; }
int RingDescriptor::degree(std::size_t i) const { return data_->degrees[i]; }
int RingDescriptor::nilpotency_bound() const { return data_->nilpotency; }

std::optional<std::size_t> RingDescriptor::index_of(const Exponents& monomial) const {
  auto it = data_->index.find(monomial);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

int RingDescriptor::product_index(std::size_t i, std::size_t j) const {
  return data_->products[i * data_->basis.size() + j];
}

bool RingDescriptor::contains(const Exponents& monomial) const {
  return monomial.size() == num_vars() && !index_of(monomial).has_value();
}

std::string RingDescriptor::to_string() const {
  std::ostringstream os;
  os << data_->field.name();
  if (data_->vars.empty()) return os.str();
  os << "[";
  for (std::size_t i = 0; i < data_->vars.size(); ++i) os << (i ? "," : "") << data_->vars[i];
  os << "]/(";
  for (std::size_t g = 0; g < data_->ideal.size(); ++g) {
    if (g) os << ", ";
    std::string mono;
    for (std::size_t i = 0; i < data_->vars.size(); ++i) {
      const int e = data_->ideal[g][i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += data_->vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    os << mono;
  }
  os << ")";
  return os.str();
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
  if (data_ == other.data_) return true;
  return data_->field == other.data_->field && data_->vars == other.data_->vars &&
         data_->ideal == other.data_->ideal;
}

// ---------------------------------------------------------------------------

RingElement::RingElement(RingDescriptor ring)
    : ring_(std::move(ring)), coeffs_(ring_.dimension(), Scalar(ring_.field())) {}

RingElement RingElement::constant(const RingDescriptor& ring, const Scalar& value) {
  RingElement a(ring);
  a.set_coeff(0, value);
  return a;
}

RingElement RingElement::constant(const RingDescriptor& ring, long value) {
  return constant(ring, Scalar(ring.field(), value));
}

RingElement RingElement::monomial(const RingDescriptor& ring, const Exponents& exps, const Scalar& coeff) {
  if (exps.size() != ring.num_vars()) fail(ErrorKind::InvalidArgument, "monomial has wrong number of exponents");
  RingElement a(ring);
  if (auto idx = ring.index_of(exps)) a.set_coeff(*idx, coeff);
  return a;
}

RingElement RingElement::variable(const RingDescriptor& ring, std::size_t index) {
  Exponents e(ring.num_vars(), 0);
  e.at(index) = 1;
  return monomial(ring, e, Scalar(ring.field(), 1));
}

Scalar RingElement::coeff(const Exponents& monomial) const {
  if (auto idx = ring_.index_of(monomial)) return coeffs_[*idx];
  return Scalar(ring_.field());
}

void RingElement::set_coeff(std::size_t basis_index, const Scalar& value) {
  if (!(value.field() == ring_.field())) fail(ErrorKind::MixedRings, "coefficient from another field");
  coeffs_.at(basis_index) = value;
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

int RingElement::nilpotency_index() const {
  if (is_unit()) fail(ErrorKind::NotNilpotent, to_string() + " is a unit");
  RingElement power = RingElement::constant(ring_, 1);
  for (int e = 1;; ++e) {
    power = power * *this;
    if (power.is_zero()) return e;
  }
}

int RingElement::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return ring_.degree(i);
  }
  return ring_.nilpotency_bound();
}

void RingElement::check_same(const RingElement& other) const {
  if (!(ring_ == other.ring_)) {
    fail(ErrorKind::MixedRings, ring_.to_string() + " vs " + other.ring_.to_string());
  }
}

RingElement RingElement::operator-() const {
  RingElement r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_same(b);
  RingElement r(a.ring_);
  const std::size_t dim = a.coeffs_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const int k = a.ring_.product_index(i, j);
      if (k >= 0) r.coeffs_[static_cast<std::size_t>(k)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

RingElement RingElement::scaled(const Scalar& s) const {
  RingElement r(*this);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

RingElement RingElement::pow(unsigned e) const {
  RingElement result = constant(ring_, 1);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RingElement RingElement::invert() const {
  if (!is_unit()) fail(ErrorKind::NotAUnit, to_string() + " is not a unit");
  // a = c (1 + n) with n nilpotent; (1 + n)^{-1} = sum_{k < N} (-n)^k.
  const Scalar c_inv = coeffs_[0].inverse();
  RingElement neg_n = -scaled(c_inv);
  neg_n.coeffs_[0] = Scalar(ring_.field());
  RingElement sum = constant(ring_, 1);
  RingElement term = sum;
  for (int k = 1; k < ring_.nilpotency_bound(); ++k) {
    term = term * neg_n;
    sum += term;
  }
  return sum.scaled(c_inv);
}

bool RingElement::operator==(const RingElement& other) const {
  return ring_ == other.ring_ && coeffs_ == other.coeffs_;
}

std::vector<std::pair<Exponents, Scalar>> RingElement::terms() const {
  std::vector<std::pair<Exponents, Scalar>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace_back(ring_.basis()[i], coeffs_[i]);
  }
  return out;
}

std::string RingElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string mono;
    const auto& exps = ring_.basis()[i];
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.var_names()[v];
      if (exps[v] > 1) mono += "^" + std::to_string(exps[v]);
    }
    std::string coef = c.to_string();
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else {
      term = coef == "1" ? mono : coef + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

bool is_unit(const RingElement& a) { return a.is_unit(); }
bool is_nilpotent(const RingElement& a) { return a.is_nilpotent(); }
int nilpotency_index(const RingElement& a) { return a.nilpotency_index(); }
RingElement invert(const RingElement& a) { return a.invert(); }

std::vector<RingElement> annihilator(const RingElement& t) {
  const auto& ring = t.ring();
  const std::size_t dim = ring.dimension();
  // Column j is t * basis_j.
  linalg::Matrix mult(ring.field(), dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (t.coeff(i).is_zero()) continue;
      const int k = ring.product_index(i, j);
      if (k >= 0) mult.at(static_cast<std::size_t>(k), j) += t.coeff(i);
    }
  }
  std::vector<RingElement> basis;
  for (const auto& v : linalg::kernel(std::move(mult))) {
    RingElement a(ring);
    for (std::size_t i = 0; i < dim; ++i) a.set_coeff(i, v[i]);
    basis.push_back(std::move(a));
  }
  return basis;
}

bool annihilates(const RingElement& a, const RingElement& t) { return (a * t).is_zero(); }

namespace {

RingDescriptor quotient_ring(const RingDescriptor& source, int level) {
  if (level < 0) fail(ErrorKind::InvalidArgument, "tower level must be >= 0");
  if (level + 1 >= source.nilpotency_bound()) return source;
  std::vector<Exponents> gens = source.ideal();
  const std::size_t r = source.num_vars();
  // All monomials of total degree level + 1.
  Exponents e(r, 0);
  std::vector<Exponents> degree_part;
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == r) {
      e[var] = remaining;
      degree_part.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
  };
  if (r > 0) rec(rec, 0, level + 1);
  gens.insert(gens.end(), degree_part.begin(), degree_part.end());
  return RingDescriptor::make(source.field(), source.var_names(), std::move(gens));
}

}  // namespace

TowerLevel::TowerLevel(RingDescriptor source, int level)
    : source_(std::move(source)), level_(level), quotient_(quotient_ring(source_, level)) {}

RingElement TowerLevel::apply(const RingElement& a) const {
  if (!(a.ring() == source_)) fail(ErrorKind::MixedRings, "element is not in the tower source ring");
  RingElement out(quotient_);
  for (std::size_t i = 0; i < source_.dimension(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    if (auto idx = quotient_.index_of(source_.basis()[i])) out.set_coeff(*idx, a.coeff(i));
  }
  return out;
}

RingElement TowerLevel::lift(const RingElement& b) const {
  if (!(b.ring() == quotient_)) fail(ErrorKind::MixedRings, "element is not in the tower quotient ring");
  RingElement out(source_);
  for (std::size_t i = 0; i < quotient_.dimension(); ++i) {
    if (b.coeff(i).is_zero()) continue;
    out.set_coeff(*source_.index_of(quotient_.basis()[i]), b.coeff(i));
  }
  return out;
}

RingElement truncate(const RingElement& a, int level) { return TowerLevel(a.ring(), level).apply(a); }

}  // namespace artinres
