#include "arbor/arbor.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace arbor {

Arbor::Arbor(int root_multiplicity, std::vector<Arbor> children)
    : root_(root_multiplicity), children_(std::move(children)), size_(root_multiplicity) {
  if (root_ < 1) throw std::invalid_argument("vertex multiplicity must be at least 1");
  std::sort(children_.begin(), children_.end());
  encoding_ = "(" + std::to_string(root_);
  for (const auto& c : children_) {
    size_ += c.size_;
    encoding_ += " " + c.encoding_;
  }
  encoding_ += ")";
}

int Arbor::vertex_count() const {
  int n = 1;
  for (const auto& c : children_) n += c.vertex_count();
  return n;
}

bool Arbor::is_linear() const {
  if (children_.size() > 1) return false;
  return children_.empty() || children_.front().is_linear();
}

namespace {

class ArborParser {
 public:
  explicit ArborParser(std::string_view text) : text_(text) {}

  Arbor run() {
    Arbor t = node();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("arbor syntax error at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Arbor node() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected multiplicity");
    if (pos_ - start > 9) fail("multiplicity too large");
    const int r = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (r < 1) fail("multiplicity must be at least 1");
    std::vector<Arbor> kids;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) fail("unexpected end");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      kids.push_back(node());
    }
    return Arbor(r, std::move(kids));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Arbor parse_arbor(std::string_view text) { return ArborParser(text).run(); }

Arbor canonicalize(const Arbor& t) {
  std::vector<Arbor> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(canonicalize(c));
  return Arbor(t.root_multiplicity(), std::move(kids));
}

std::vector<Arbor> enumerate_arbors(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_arbors needs n >= 1");
  // by_size[k] = all arbors of size k; forests are multisets drawn in
  // nondecreasing order from the concatenated pool.
  std::vector<std::vector<Arbor>> by_size(static_cast<std::size_t>(n) + 1);
  std::vector<const Arbor*> pool;
  for (int k = 1; k <= n; ++k) {
    std::vector<Arbor> out;
    for (int r = k; r >= 1; --r) {
      const int rest = k - r;
      std::vector<Arbor> forest;
      std::function<void(std::size_t, int)> grow = [&](std::size_t from, int left) {
        if (left == 0) {
          out.emplace_back(r, forest);
          return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
          const Arbor& c = *pool[i];
          if (c.size() > left) continue;
          forest.push_back(c);
          grow(i, left - c.size());
          forest.pop_back();
        }
      };
      grow(0, rest);
    }
    std::sort(out.begin(), out.end());
    by_size[static_cast<std::size_t>(k)] = std::move(out);
    if (k < n)
      for (const auto& t : by_size[static_cast<std::size_t>(k)]) pool.push_back(&t);
  }
  return by_size[static_cast<std::size_t>(n)];
}

std::vector<int> linear_multiplicities(const Arbor& t) {
  if (!t.is_linear()) throw std::invalid_argument("arbor is not linear: " + t.encode());
  std::vector<int> m;
  const Arbor* cur = &t;
  for (;;) {
    m.push_back(cur->root_multiplicity());
    if (cur->children().empty()) break;
    cur = &cur->children().front();
  }
  return m;
}

Arbor linear_from_multiplicities(const std::vector<int>& mults) {
  if (mults.empty()) throw std::invalid_argument("empty multiplicity list");
  Arbor t(mults.back());
  for (auto it = mults.rbegin() + 1; it != mults.rend(); ++it) t = Arbor(*it, {t});
  return t;
}

Arbor reverse_linear(const Arbor& t) {
  auto m = linear_multiplicities(t);
  std::reverse(m.begin(), m.end());
  return linear_from_multiplicities(m);
}

Arbor type_a(int n) {
  if (n < 1) throw std::invalid_argument("type_a needs n >= 1");
  return linear_from_multiplicities(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Arbor type_b(int n) {
  if (n < 1) throw std::invalid_argument("type_b needs n >= 1");
  return Arbor(n);
}

Arbor halo(int n) {
  if (n < 2) throw std::invalid_argument("halo needs n >= 2");
  return Arbor(n - 1, {Arbor(1)});
}

Arbor halo_rev(int n) {
  if (n < 2) throw std::invalid_argument("halo_rev needs n >= 2");
  return Arbor(1, {Arbor(n - 1)});
}

Arbor hochschild(int n) {
  if (n < 1) throw std::invalid_argument("hochschild needs n >= 1");
  return Arbor(1, std::vector<Arbor>(static_cast<std::size_t>(n - 1), Arbor(1)));
}

std::vector<VertexAddress> vertex_addresses(const Arbor& t) {
  std::vector<VertexAddress> out;
  VertexAddress cur;
  std::function<void(const Arbor&)> walk = [&](const Arbor& a) {
    out.push_back(cur);
    for (std::size_t i = 0; i < a.children().size(); ++i) {
      cur.path.push_back(static_cast<int>(i));
      walk(a.children()[i]);
      cur.path.pop_back();
    }
  };
  walk(t);
  return out;
}

const Arbor& subtree_at(const Arbor& t, const VertexAddress& v) {
  const Arbor* cur = &t;
  for (int i : v.path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->children().size())
      throw std::out_of_range("invalid vertex address");
    cur = &cur->children()[static_cast<std::size_t>(i)];
  }
  return *cur;
}

}  // namespace arbor
