#include "softtop/crisp.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace softtop {

namespace {

std::vector<Bitset> canonicalize(std::vector<Bitset> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

// All unions of subfamilies of `generators`, computed by joining one
// generator at a time.
std::vector<Bitset> union_closure(std::size_t width, std::span<const Bitset> generators) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<Bitset> todo;
  seen.insert(Bitset(width));  // empty union
  todo.push_back(Bitset(width));
  for (const auto& g : generators)
    if (seen.insert(g).second) todo.push_back(g);
  while (!todo.empty()) {
    Bitset cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : generators) {
      Bitset u = cur | g;
      if (seen.insert(u).second) todo.push_back(u);
    }
  }
  return std::vector<Bitset>(seen.begin(), seen.end());
}

}  // namespace

CrispTopology CrispTopology::from_sets(std::size_t universe, std::vector<Bitset> sets) {
  return CrispTopology{universe, canonicalize(std::move(sets))};
}

CrispTopology CrispTopology::indiscrete(std::size_t universe) {
  return from_sets(universe, {Bitset(universe), Bitset(universe, true)});
}

CrispTopology CrispTopology::discrete(std::size_t universe) {
  std::vector<Bitset> sets;
  sets.reserve(std::size_t{1} << universe);
  for (std::size_t mask = 0; mask < (std::size_t{1} << universe); ++mask) {
    Bitset s(universe);
    for (std::size_t i = 0; i < universe; ++i)
      if (mask & (std::size_t{1} << i)) s.set(i);
    sets.push_back(std::move(s));
  }
  return from_sets(universe, std::move(sets));
}

bool CrispTopology::contains(const Bitset& s) const {
  return std::binary_search(sets.begin(), sets.end(), s);
}

std::string CrispTopology::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    bool first = true;
    for (std::size_t e = sets[i].find_first(); e != Bitset::npos; e = sets[i].find_next(e)) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(e);
    }
    out += "}";
  }
  return out + "}";
}

std::optional<std::string> crisp_axiom_violation(std::size_t universe,
                                                 std::span<const Bitset> sets) {
  std::unordered_set<Bitset, BitsetHash> index(sets.begin(), sets.end());
  if (!index.count(Bitset(universe))) return "missing empty set";
  if (!index.count(Bitset(universe, true))) return "missing full universe";
  std::vector<Bitset> list(index.begin(), index.end());
  std::sort(list.begin(), list.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (!index.count(list[i] | list[j])) return "union escapes the collection";
      if (!index.count(list[i] & list[j])) return "intersection escapes the collection";
    }
  return std::nullopt;
}

CrispTopology crisp_product(const CrispTopology& a, const CrispTopology& b) {
  const std::size_t width = a.universe * b.universe;
  std::vector<Bitset> rectangles;
  rectangles.reserve(a.sets.size() * b.sets.size());
  for (const auto& u : a.sets)
    for (const auto& v : b.sets) {
      Bitset r(width);
      for (std::size_t i = u.find_first(); i != Bitset::npos; i = u.find_next(i))
        for (std::size_t j = v.find_first(); j != Bitset::npos; j = v.find_next(j))
          r.set(i * b.universe + j);
      rectangles.push_back(std::move(r));
    }
  return CrispTopology::from_sets(width, union_closure(width, rectangles));
}

CrispTopology crisp_product(std::span<const CrispTopology> factors) {
  CrispTopology acc = factors.front();
  for (std::size_t s = 1; s < factors.size(); ++s) acc = crisp_product(acc, factors[s]);
  return acc;
}

CrispTopology crisp_sum(std::span<const CrispTopology> summands) {
  std::size_t width = 0;
  for (const auto& t : summands) width += t.universe;
  // One open per choice of an open in every summand, pasted at its offset.
  std::vector<Bitset> opens;
  std::vector<std::size_t> choice(summands.size(), 0);
  while (true) {
    Bitset u(width);
    std::size_t offset = 0;
    for (std::size_t s = 0; s < summands.size(); ++s) {
      u.write_slice(offset, summands[s].sets[choice[s]]);
      offset += summands[s].universe;
    }
    opens.push_back(std::move(u));
    std::size_t s = 0;
    while (s < summands.size() && ++choice[s] == summands[s].sets.size()) {
      choice[s] = 0;
      ++s;
    }
    if (s == summands.size()) break;
  }
  return CrispTopology::from_sets(width, std::move(opens));
}

}  // namespace softtop
