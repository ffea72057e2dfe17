#include <fstream>
#include <mutex>
#include <sstream>

#include "arboreal/arith.hpp"

namespace arboreal::arith {

FactorResult FactorCache::factor(const Integer& n) const {
  Integer key = abs(n);
  if (auto hit = lookup(key)) return *hit;
  // Computed outside any lock so other readers proceed.
  FactorResult r = arith::factor(key, budget_);
  insert(key, r);
  return r;
}

std::optional<FactorResult> FactorCache::lookup(const Integer& n) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(abs(n));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FactorCache::insert(const Integer& n, const FactorResult& result) const {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(abs(n), result);
  // A complete factorization supersedes a partial one.
  if (!inserted && !it->second.complete && result.complete) it->second = result;
}

std::size_t FactorCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::string FactorCache::serialize() const {
  std::shared_lock lock(mutex_);
  std::ostringstream os;
  for (const auto& [n, f] : entries_) {
    os << n.get_str();
    for (const auto& [p, e] : f.factored_part) os << ' ' << p.get_str() << '^' << e;
    if (!f.complete) os << " cofactor=" << f.cofactor.get_str();
    os << '\n';
  }
  return os.str();
}

void FactorCache::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::map<Integer, FactorResult> parsed;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto bad = [&] { return DomainError("factor cache line " + std::to_string(lineno) + ": malformed"); };
    Integer n;
    if (n.set_str(tok, 10) != 0 || n <= 0) throw bad();
    FactorResult f;
    while (ls >> tok) {
      if (tok.rfind("cofactor=", 0) == 0) {
        if (f.cofactor.set_str(tok.substr(9), 10) != 0) throw bad();
        f.complete = f.cofactor == 1;
        continue;
      }
      auto caret = tok.find('^');
      if (caret == std::string::npos) throw bad();
      Integer p;
      if (p.set_str(tok.substr(0, caret), 10) != 0) throw bad();
      int e = std::stoi(tok.substr(caret + 1));
      f.factored_part[p] += e;
    }
    if (f.product() != n) throw bad();
    parsed[n] = std::move(f);
  }
  std::unique_lock lock(mutex_);
  for (auto& [n, f] : parsed) {
    auto [it, inserted] = entries_.emplace(n, f);
    if (!inserted && !it->second.complete && f.complete) it->second = f;
  }
}

void FactorCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write factor cache " + path.string());
  out << serialize();
}

void FactorCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::ostringstream ss;
  ss << in.rdbuf();
  deserialize(ss.str());
}

}  // namespace arboreal::arith
