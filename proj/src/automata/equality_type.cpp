#include "ura/automata/equality_type.hpp"

#include <algorithm>
#include <map>

#include "ura/core/error.hpp"

namespace ura {

EqualityType::EqualityType(std::vector<int> codes) : codes_(std::move(codes)) {
  int next = 0;
  for (int c : codes_) {
    if (c == kBottom) continue;
    if (c < 0 || c > next) throw Error("equality type codes are not a restricted-growth encoding");
    if (c == next) ++next;
  }
}

EqualityType EqualityType::of(std::span<const Slot> values) {
  EqualityType t;
  t.codes_.reserve(values.size());
  std::vector<Atom> seen;
  for (const Slot& v : values) {
    if (!v) {
      t.codes_.push_back(kBottom);
      continue;
    }
    auto it = std::find(seen.begin(), seen.end(), *v);
    if (it == seen.end()) {
      t.codes_.push_back(static_cast<int>(seen.size()));
      seen.push_back(*v);
    } else {
      t.codes_.push_back(static_cast<int>(it - seen.begin()));
    }
  }
  return t;
}

int EqualityType::width() const {
  int w = 0;
  for (int c : codes_) w = std::max(w, c + 1);
  return w;
}

EqualityType EqualityType::restrict(std::size_t begin, std::size_t end) const {
  EqualityType t;
  std::map<int, int> renumber;
  for (std::size_t p = begin; p < end; ++p) {
    int c = codes_[p];
    if (c == kBottom) {
      t.codes_.push_back(kBottom);
      continue;
    }
    auto [it, inserted] = renumber.try_emplace(c, static_cast<int>(renumber.size()));
    t.codes_.push_back(it->second);
  }
  return t;
}

Valuation EqualityType::representative() const {
  Valuation v;
  v.reserve(codes_.size());
  for (int c : codes_) v.push_back(c == kBottom ? Slot{} : Slot{static_cast<Atom>(c) + 1});
  return v;
}

std::string EqualityType::to_string() const {
  std::string s;
  for (int c : codes_) s += c == kBottom ? std::string("_") : std::to_string(c + 1);
  return s;
}

std::strong_ordering operator<=>(const EqualityType& a, const EqualityType& b) {
  std::size_t n = std::min(a.codes_.size(), b.codes_.size());
  for (std::size_t i = 0; i < n; ++i) {
    bool ab = a.codes_[i] == EqualityType::kBottom;
    bool bb = b.codes_[i] == EqualityType::kBottom;
    if (ab != bb) return ab ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.codes_.size() != b.codes_.size()) return a.codes_.size() <=> b.codes_.size();
  return a.codes_ <=> b.codes_;
}

namespace {

void enumerate_blocks(std::vector<int>& codes, std::size_t p, int next_block,
                      const std::function<void(const EqualityType&)>& visit) {
  while (p < codes.size() && codes[p] == EqualityType::kBottom) ++p;
  if (p == codes.size()) {
    visit(EqualityType(codes));
    return;
  }
  for (int b = 0; b <= next_block; ++b) {
    codes[p] = b;
    enumerate_blocks(codes, p + 1, b == next_block ? next_block + 1 : next_block, visit);
  }
}

void enumerate_bottoms(std::vector<int>& codes, std::size_t p, const std::vector<bool>& allowed,
                       const std::function<void(const EqualityType&)>& visit) {
  if (p == codes.size()) {
    enumerate_blocks(codes, 0, 0, visit);
    for (int& c : codes)
      if (c != EqualityType::kBottom) c = 0;
    return;
  }
  if (p < allowed.size() && allowed[p]) {
    codes[p] = EqualityType::kBottom;
    enumerate_bottoms(codes, p + 1, allowed, visit);
  }
  codes[p] = 0;
  enumerate_bottoms(codes, p + 1, allowed, visit);
}

}  // namespace

void for_each_equality_type(std::size_t positions, const std::vector<bool>& bottom_allowed,
                            const std::function<void(const EqualityType&)>& visit) {
  std::vector<int> codes(positions, 0);
  enumerate_bottoms(codes, 0, bottom_allowed, visit);
}

std::vector<EqualityType> enumerate_equality_types(std::size_t positions,
                                                   const std::vector<bool>& bottom_allowed) {
  std::vector<EqualityType> out;
  for_each_equality_type(positions, bottom_allowed, [&](const EqualityType& t) { out.push_back(t); });
  return out;
}

std::vector<EqualityType> valuation_orbits(std::size_t registers) {
  return enumerate_equality_types(registers, std::vector<bool>(registers, true));
}

}  // namespace ura
