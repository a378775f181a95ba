#include "mg/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string_view>

#include "mg/errors.hpp"

namespace mg {

int Multidegree::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool Multidegree::leq(const Multidegree& other) const {
  if (other.size() != size()) throw StructuralError("multidegree length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

Multidegree Multidegree::operator+(const Multidegree& other) const {
  if (other.size() != size()) throw StructuralError("multidegree length mismatch");
  Multidegree r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] += other.entries_[i];
  return r;
}

Multidegree Multidegree::operator-(const Multidegree& other) const {
  if (other.size() != size()) throw StructuralError("multidegree length mismatch");
  Multidegree r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] -= other.entries_[i];
  return r;
}

Multidegree Multidegree::ones(std::size_t v, std::size_t k) {
  Multidegree r(v);
  for (std::size_t i = 0; i < std::min(v, k); ++i) r.entries_[i] = 1;
  return r;
}

std::string Multidegree::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

Monomial Monomial::variable(VarIndex var, int power) {
  Monomial m;
  m.set(var, power);
  return m;
}

void Monomial::set(VarIndex var, int exponent) {
  if (var >= kMaxVariables) throw StructuralError("variable index exceeds monomial capacity");
  if (exponent < 0 || exponent > 255) throw ResourceLimitError("exponent out of range [0, 255]");
  exps_[var] = static_cast<Exponent>(exponent);
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exps_) {
    if (e) return false;
  }
  return true;
}

bool Monomial::is_squarefree() const {
  for (auto e : exps_) {
    if (e > 1) return false;
  }
  return true;
}

std::size_t Monomial::support_end() const {
  for (std::size_t i = kMaxVariables; i > 0; --i) {
    if (exps_[i - 1]) return i;
  }
  return 0;
}

std::vector<VarIndex> Monomial::support() const {
  std::vector<VarIndex> s;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i]) s.push_back(static_cast<VarIndex>(i));
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  bool ok = true;
  for (std::size_t i = 0; i < kMaxVariables; ++i) ok &= exps_[i] <= other.exps_[i];
  return ok;
}

bool Monomial::coprime(const Monomial& other) const {
  bool ok = true;
  for (std::size_t i = 0; i < kMaxVariables; ++i) ok &= (exps_[i] == 0) | (other.exps_[i] == 0);
  return ok;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned s = unsigned{exps_[i]} + other.exps_[i];
    overflow |= s > 255;
    r.exps_[i] = static_cast<Exponent>(s);
  }
  if (overflow) throw ResourceLimitError("exponent overflow (limit 255)");
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  const std::string_view bytes(reinterpret_cast<const char*>(exps_.data()), exps_.size());
  return std::hash<std::string_view>{}(bytes);
}

BlockRing::BlockRing(std::vector<int> block_sizes, Coefficient characteristic)
    : block_sizes_(std::move(block_sizes)), characteristic_(characteristic) {
  if (block_sizes_.empty()) throw StructuralError("a ring needs at least one block");
  if (characteristic_ == 0) {
    throw PreconditionError("characteristic 0 is not supported; use a large prime");
  }
  if (!field::is_prime(characteristic_) || characteristic_ >= (1u << 31)) {
    throw PreconditionError("characteristic must be a prime below 2^31");
  }
  for (std::size_t b = 0; b < block_sizes_.size(); ++b) {
    if (block_sizes_[b] < 1) throw StructuralError("every block needs at least one variable");
    block_start_.push_back(static_cast<VarIndex>(graded_vars_));
    for (int j = 0; j < block_sizes_[b]; ++j) {
      block_of_.push_back(static_cast<int>(b));
      position_of_.push_back(j);
    }
    graded_vars_ += static_cast<std::size_t>(block_sizes_[b]);
  }
  if (graded_vars_ > kMaxVariables - 1) {
    throw StructuralError("ring too large: at most " + std::to_string(kMaxVariables - 1) +
                          " graded variables are supported");
  }
}

VarIndex BlockRing::var(std::size_t block, std::size_t position) const {
  if (block >= block_sizes_.size()) throw StructuralError("block out of range");
  if (position >= static_cast<std::size_t>(block_sizes_[block])) {
    throw StructuralError("position out of range in block " + std::to_string(block + 1));
  }
  return block_start_[block] + static_cast<VarIndex>(position);
}

int BlockRing::block_of(VarIndex var) const {
  if (var < graded_vars_) return block_of_[var];
  if (var < num_variables()) return -1;
  throw StructuralError("variable index out of range");
}

int BlockRing::position_of(VarIndex var) const {
  if (var < graded_vars_) return position_of_[var];
  if (var < num_variables()) return static_cast<int>(var - graded_vars_);
  throw StructuralError("variable index out of range");
}

BlockRing BlockRing::with_auxiliary_variable() const {
  if (num_variables() + 1 > kMaxVariables) throw StructuralError("no room for an auxiliary variable");
  BlockRing r(*this);
  ++r.aux_vars_;
  return r;
}

BlockRing BlockRing::without_auxiliary() const {
  BlockRing r(*this);
  r.aux_vars_ = 0;
  return r;
}

Multidegree BlockRing::multidegree_of(const Monomial& m) const {
  if (!contains(m)) throw StructuralError("monomial does not belong to the ring");
  Multidegree d(num_blocks());
  for (std::size_t i = 0; i < graded_vars_; ++i) d[block_of_[i]] += m[static_cast<VarIndex>(i)];
  return d;
}

Multidegree BlockRing::unit_degree(std::size_t block) const {
  Multidegree d(num_blocks());
  d[block] = 1;
  return d;
}

std::string BlockRing::variable_name(VarIndex var) const {
  if (var < graded_vars_) {
    return "x[" + std::to_string(block_of_[var] + 1) + "," + std::to_string(position_of_[var] + 1) +
           "]";
  }
  return "t" + std::to_string(var - graded_vars_ + 1);
}

std::string BlockRing::monomial_to_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (VarIndex v = 0; v < num_variables(); ++v) {
    if (!m[v]) continue;
    if (!s.empty()) s += '*';
    s += variable_name(v);
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s;
}

bool BlockRing::contains(const Monomial& m) const { return m.support_end() <= num_variables(); }

std::string BlockRing::to_string() const {
  std::ostringstream out;
  out << "ring v=" << num_blocks() << " blocks=[";
  for (std::size_t i = 0; i < block_sizes_.size(); ++i) {
    if (i) out << ',';
    out << block_sizes_[i];
  }
  out << "] char=" << characteristic_;
  return out.str();
}

bool BlockRing::operator==(const BlockRing& other) const {
  return block_sizes_ == other.block_sizes_ && characteristic_ == other.characteristic_ &&
         aux_vars_ == other.aux_vars_;
}

}  // namespace mg
