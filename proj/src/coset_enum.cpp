#include "orbi/coset_enum.hpp"

#include <algorithm>

namespace orbi {

namespace {

std::vector<std::vector<int>> relator_codes(const Presentation& p) {
  std::vector<std::vector<int>> out;
  for (const auto& r : p.relations) {
    const Word rel = concat(r.lhs, invert(r.rhs));
    std::vector<int> code;
    for (const auto& l : rel) {
      const int g = p.index_of(l.gen);
      if (g < 0) throw Error("relation uses undeclared generator " + l.gen.label());
      code.push_back(2 * g + (l.sign > 0 ? 0 : 1));
    }
    // Cyclic reduction.
    std::size_t b = 0, e = code.size();
    while (e - b >= 2 && (code[b] ^ 1) == code[e - 1]) {
      ++b;
      --e;
    }
    code = std::vector<int>(code.begin() + b, code.begin() + e);
    if (!code.empty()) out.push_back(std::move(code));
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(int ngens, std::vector<std::vector<int>> relators, std::int64_t max_cosets)
      : cols_(2 * ngens), max_(max_cosets) {
    // Every cyclic conjugate of every relator and of its inverse, bucketed by
    // first letter, so that a deduction at column x only rescans what it touches.
    by_first_.resize(cols_);
    for (const auto& r : relators) {
      std::vector<int> inv(r.rbegin(), r.rend());
      for (int& x : inv) x ^= 1;
      for (const std::vector<int>* w : {&r, static_cast<const std::vector<int>*>(&inv)}) {
        for (std::size_t s = 0; s < w->size(); ++s) {
          std::vector<int> rot(w->begin() + s, w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + s);
          auto& bucket = by_first_[rot.front()];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(rot);
        }
      }
    }
  }

  EnumResult run() {
    EnumResult res;
    if (!new_coset()) return res;
    std::int64_t scan_pos = 0;
    for (;;) {
      process_deductions();
      // Felsch rule: fill the first undefined entry of the first live coset.
      bool found = false;
      while (scan_pos < static_cast<std::int64_t>(parent_.size()) && !found) {
        if (parent_[scan_pos] != scan_pos) {
          ++scan_pos;
          continue;
        }
        for (int x = 0; x < cols_; ++x) {
          if (at(scan_pos, x) < 0) {
            const std::int64_t before = static_cast<std::int64_t>(parent_.size());
            if (!new_coset()) {
              res.status = EnumStatus::Overflow;
              res.table.defined = before;
              return res;
            }
            set(scan_pos, x, before);
            set(before, x ^ 1, scan_pos);
            deductions_.push_back({scan_pos, x});
            found = true;
            break;
          }
        }
        if (!found) ++scan_pos;
      }
      if (!found) {
        // Coincidences can reopen entries of cosets behind the scan pointer.
        scan_pos = first_open_coset();
        if (scan_pos < 0 && !full_scan()) break;
        if (scan_pos < 0) scan_pos = 0;
      }
    }
    res.status = EnumStatus::Complete;
    res.table = compact();
    res.order = res.table.live;
    return res;
  }

 private:
  int cols_;
  std::int64_t max_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> parent_;
  std::vector<std::pair<std::int64_t, int>> deductions_;
  std::vector<std::int64_t> queue_;
  std::int64_t live_ = 0;

  // Scans every relator at every live coset of a closed table. Returns true if
  // that produced new information (so enumeration must continue).
  bool full_scan() {
    const std::int64_t live_before = live_;
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(parent_.size()); ++c) {
      for (const auto& bucket : by_first_) {
        for (const auto& r : bucket) {
          if (parent_[c] != c) break;
          scan(c, r);
        }
      }
    }
    const bool changed = live_ != live_before || !deductions_.empty() || first_open_coset() >= 0;
    return changed;
  }

  std::int64_t first_open_coset() const {
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(parent_.size()); ++c) {
      if (parent_[c] != c) continue;
      for (int x = 0; x < cols_; ++x) {
        if (at(c, x) < 0) return c;
      }
    }
    return -1;
  }

  std::int64_t at(std::int64_t c, int x) const { return table_[c * cols_ + x]; }
  void set(std::int64_t c, int x, std::int64_t v) { table_[c * cols_ + x] = v; }

  bool new_coset() {
    if (static_cast<std::int64_t>(parent_.size()) >= max_) return false;
    parent_.push_back(static_cast<std::int64_t>(parent_.size()));
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    return true;
  }

  std::int64_t rep(std::int64_t c) {
    std::int64_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::int64_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int64_t a, std::int64_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
    --live_;
  }

  void coincidence(std::int64_t a, std::int64_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::int64_t g = queue_[i];
      for (int x = 0; x < cols_; ++x) {
        const std::int64_t d = at(g, x);
        if (d < 0) continue;
        if (at(d, x ^ 1) == g) set(d, x ^ 1, -1);
        const std::int64_t mu = rep(g);
        const std::int64_t nu = rep(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1) >= 0) {
          merge(mu, at(nu, x ^ 1));
        } else {
          set(mu, x, nu);
          set(nu, x ^ 1, mu);
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  void scan(std::int64_t alpha, const std::vector<int>& w) {
    std::int64_t f = alpha, b = alpha;
    std::int64_t i = 0, j = static_cast<std::int64_t>(w.size()) - 1;
    while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
    if (i > j) {
      if (f != alpha) coincidence(f, alpha);
      return;
    }
    while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      set(f, w[i], b);
      set(b, w[i] ^ 1, f);
      deductions_.push_back({f, w[i]});
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (parent_[c] != c) continue;
      for (const auto& r : by_first_[x]) {
        if (parent_[c] != c) break;
        scan(c, r);
      }
      if (parent_[c] != c) continue;
      const std::int64_t d = at(c, x);
      if (d < 0 || parent_[d] != d) continue;
      for (const auto& r : by_first_[x ^ 1]) {
        if (parent_[d] != d) break;
        scan(d, r);
      }
    }
  }

  CosetTable compact() {
    CosetTable t;
    t.defined = static_cast<std::int64_t>(parent_.size());
    std::vector<std::int64_t> index(parent_.size(), -1);
    std::int64_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (parent_[c] == static_cast<std::int64_t>(c)) index[c] = next++;
    }
    t.live = next;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (index[c] < 0) continue;
      std::vector<int> row(cols_);
      for (int x = 0; x < cols_; ++x) row[x] = static_cast<int>(index[rep(at(c, x))]);
      t.rows.push_back(std::move(row));
    }
    t.status = EnumStatus::Complete;
    return t;
  }
};

}  // namespace

EnumResult enumerate_order(const Presentation& p, std::int64_t max_cosets) {
  if (max_cosets < 1) throw Error("max_cosets must be positive");
  Enumerator e(static_cast<int>(p.generators.size()), relator_codes(p), max_cosets);
  return e.run();
}

bool table_is_consistent(const Presentation& p, const CosetTable& t) {
  const auto rels = relator_codes(p);
  const int cols = 2 * static_cast<int>(p.generators.size());
  for (std::size_t c = 0; c < t.rows.size(); ++c) {
    if (static_cast<int>(t.rows[c].size()) != cols) return false;
    for (int x = 0; x < cols; ++x) {
      const int d = t.rows[c][x];
      if (d < 0 || d >= static_cast<int>(t.rows.size()) || t.rows[d][x ^ 1] != static_cast<int>(c)) return false;
    }
    for (const auto& r : rels) {
      std::size_t cur = c;
      for (int x : r) cur = static_cast<std::size_t>(t.rows[cur][x]);
      if (cur != c) return false;
    }
  }
  return true;
}

}  // namespace orbi
