#include "mg/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mg/errors.hpp"

namespace mg {
namespace {

std::vector<VarIndex> identity_priority(std::size_t n) {
  std::vector<VarIndex> p(n);
  std::iota(p.begin(), p.end(), VarIndex{0});
  return p;
}

void check_priority(const std::vector<VarIndex>& priority, std::size_t n) {
  if (priority.size() != n) throw StructuralError("variable priority has the wrong length");
  std::vector<bool> seen(n, false);
  for (auto v : priority) {
    if (v >= n || seen[v]) throw StructuralError("variable priority is not a permutation");
    seen[v] = true;
  }
}

const char* kind_name(TermOrder::Kind k) {
  switch (k) {
    case TermOrder::Kind::Lex:
      return "lex";
    case TermOrder::Kind::DegRevLex:
      return "degrevlex";
    case TermOrder::Kind::Weight:
      return "weight";
    case TermOrder::Kind::Elimination:
      return "elim";
  }
  return "?";
}

}  // namespace

TermOrder TermOrder::lex(const BlockRing& ring) {
  return lex(ring, identity_priority(ring.num_variables()));
}

TermOrder TermOrder::degrevlex(const BlockRing& ring) {
  return degrevlex(ring, identity_priority(ring.num_variables()));
}

TermOrder TermOrder::lex(const BlockRing& ring, std::vector<VarIndex> priority) {
  check_priority(priority, ring.num_variables());
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = ring.num_variables();
  o.priority_ = std::move(priority);
  o.finish();
  return o;
}

TermOrder TermOrder::degrevlex(const BlockRing& ring, std::vector<VarIndex> priority) {
  check_priority(priority, ring.num_variables());
  TermOrder o;
  o.kind_ = Kind::DegRevLex;
  o.nvars_ = ring.num_variables();
  o.priority_ = std::move(priority);
  o.finish();
  return o;
}

TermOrder TermOrder::weight(const BlockRing& ring, std::vector<std::int64_t> weights,
                            Kind tie_break) {
  return weight(ring, std::move(weights), tie_break, identity_priority(ring.num_variables()));
}

TermOrder TermOrder::weight(const BlockRing& ring, std::vector<std::int64_t> weights,
                            Kind tie_break, std::vector<VarIndex> priority) {
  check_priority(priority, ring.num_variables());
  if (weights.size() != ring.num_variables()) throw StructuralError("weight vector has the wrong length");
  if (std::any_of(weights.begin(), weights.end(), [](auto w) { return w < 0; })) {
    throw PreconditionError("weights must be non-negative");
  }
  if (tie_break != Kind::Lex && tie_break != Kind::DegRevLex) {
    throw PreconditionError("weight orders break ties with lex or degrevlex");
  }
  TermOrder o;
  o.kind_ = Kind::Weight;
  o.tie_break_ = tie_break;
  o.nvars_ = ring.num_variables();
  o.priority_ = std::move(priority);
  o.weights_ = std::move(weights);
  o.finish();
  return o;
}

TermOrder TermOrder::elimination(const BlockRing& ring, const std::vector<VarIndex>& front,
                                 const TermOrder& inner) {
  if (inner.nvars_ != ring.num_variables()) throw StructuralError("inner order is for another ring");
  TermOrder o;
  o.kind_ = Kind::Elimination;
  o.nvars_ = ring.num_variables();
  o.priority_ = inner.priority_;
  for (auto v : front) {
    if (v >= o.nvars_) throw StructuralError("elimination variable out of range");
    o.front_.push_back(v);
  }
  std::sort(o.front_.begin(), o.front_.end());
  o.front_.erase(std::unique(o.front_.begin(), o.front_.end()), o.front_.end());
  o.inner_ = std::make_shared<const TermOrder>(inner);
  o.unrestricted_ = inner.unrestricted_;
  o.finish();
  return o;
}

TermOrder TermOrder::unrestricted() const {
  TermOrder o(*this);
  o.unrestricted_ = true;
  o.finish();
  return o;
}

void TermOrder::finish() {
  identity_priority_ = true;
  for (std::size_t i = 0; i < priority_.size(); ++i) identity_priority_ &= priority_[i] == i;
  std::ostringstream out;
  out << kind_name(kind_);
  if (kind_ == Kind::Weight) {
    out << '(';
    for (std::size_t i = 0; i < weights_.size(); ++i) out << (i ? "," : "") << weights_[i];
    out << ")/" << kind_name(tie_break_);
  }
  if (kind_ == Kind::Elimination) {
    out << '{';
    bool first = true;
    for (auto v : front_) {
      out << (first ? "" : ",") << v;
      first = false;
    }
    out << "}/" << inner_->canonical();
  } else {
    out << '[';
    for (std::size_t i = 0; i < priority_.size(); ++i) out << (i ? "," : "") << priority_[i];
    out << ']';
  }
  if (unrestricted_) out << "!u";
  canonical_ = out.str();
}

std::strong_ordering TermOrder::tie_compare(const Monomial& a, const Monomial& b) const {
  const Kind k = kind_ == Kind::Weight ? tie_break_ : kind_;
  if (k == Kind::Lex) {
    if (identity_priority_) return a <=> b;
    for (auto v : priority_) {
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  // degrevlex
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da <=> db;
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
    case Kind::DegRevLex:
      return tie_compare(a, b);
    case Kind::Weight: {
      std::int64_t wa = 0, wb = 0;
      for (std::size_t v = 0; v < nvars_; ++v) {
        wa += weights_[v] * a[static_cast<VarIndex>(v)];
        wb += weights_[v] * b[static_cast<VarIndex>(v)];
      }
      if (wa != wb) return wa <=> wb;
      return tie_compare(a, b);
    }
    case Kind::Elimination: {
      int fa = 0, fb = 0;
      for (auto v : front_) {
        fa += a[v];
        fb += b[v];
      }
      if (fa != fb) return fa <=> fb;
      return inner_->compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

bool TermOrder::respects_block_convention(const BlockRing& ring) const {
  if (nvars_ != ring.num_variables()) return false;
  for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
    for (int j = 0; j + 1 < ring.block_size(b); ++j) {
      const auto hi = Monomial::variable(ring.var(b, j));
      const auto lo = Monomial::variable(ring.var(b, j + 1));
      if (compare(hi, lo) <= 0) return false;
    }
  }
  return true;
}

std::string TermOrder::canonical() const { return canonical_; }

std::string TermOrder::describe(const BlockRing& ring) const {
  std::ostringstream out;
  if (kind_ == Kind::Elimination) {
    out << "elimination of {";
    bool first = true;
    for (auto v : front_) {
      out << (first ? "" : ",") << ring.variable_name(v);
      first = false;
    }
    out << "} then " << inner_->describe(ring);
    return out.str();
  }
  out << kind_name(kind_);
  if (kind_ == Kind::Weight) {
    out << " w=(";
    for (std::size_t i = 0; i < weights_.size(); ++i) out << (i ? "," : "") << weights_[i];
    out << ") tie-break " << kind_name(tie_break_);
  }
  out << ' ';
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    out << (i ? ">" : "") << ring.variable_name(priority_[i]);
  }
  if (unrestricted_) out << " (unrestricted)";
  return out.str();
}

}  // namespace mg
