#include "fobce/bce.hpp"

#include <chrono>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "fobce/resolve.hpp"

namespace fobce {

void OccurrenceIndex::add(const Clause& c) {
  for (std::size_t i = 0; i < c.size(); ++i) map_[{c[i].predicate(), c[i].positive()}][c.id].push_back(i);
}

void OccurrenceIndex::remove(const Clause& c) {
  for (const auto& l : c.literals) {
    auto it = map_.find({l.predicate(), l.positive()});
    if (it == map_.end()) continue;
    it->second.erase(c.id);
    if (it->second.empty()) map_.erase(it);
  }
}

const OccurrenceIndex::Entries* OccurrenceIndex::find(SymbolId predicate, bool positive) const {
  auto it = map_.find({predicate, positive});
  return it == map_.end() ? nullptr : &it->second;
}

std::size_t OccurrenceIndex::occurrences(SymbolId predicate, bool positive) const {
  const auto* e = find(predicate, positive);
  if (!e) return 0;
  std::size_t n = 0;
  for (const auto& [id, pos] : *e) n += pos.size();
  return n;
}

OccurrenceIndex build_index(const Formula& f) {
  OccurrenceIndex idx;
  for (const auto& [id, c] : f.clauses()) idx.add(c);
  return idx;
}

Mode resolve_mode(const Formula& f, ModeChoice choice, bool unsafe_noeq) {
  bool eq = f.contains_equality();
  switch (choice) {
    case ModeChoice::Auto:
      return eq ? Mode::Eq : Mode::NoEq;
    case ModeChoice::Eq:
      return Mode::Eq;
    case ModeChoice::NoEq:
      if (eq && !unsafe_noeq)
        throw std::invalid_argument("plain blocking is unsound on a formula with equality; use eq mode");
      return Mode::NoEq;
  }
  return Mode::NoEq;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  std::uint64_t priority;
  ClauseId clause;
  std::size_t pos;
  ClauseId cursor;  // lowest partner id not yet tried
  std::uint64_t partners_tested;

  friend bool operator>(const Candidate& a, const Candidate& b) {
    return std::tie(a.priority, a.clause, a.pos) > std::tie(b.priority, b.clause, b.pos);
  }
};

bool is_tautology(const Clause& c, Mode mode) {
  if (mode == Mode::Eq) return is_valid_eq(c);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i].opposes(c[j]) && c[i].complement() == c[j]) return true;
  return false;
}

class Engine {
 public:
  Engine(const Formula& f, const EngineOptions& opt)
      : f_(f), opt_(opt), mode_(resolve_mode(f, opt.mode, opt.unsafe_noeq)), start_(Clock::now()) {
    if (opt.random_order_seed) rng_.seed(*opt.random_order_seed);
    report_.clauses_in = f.size();
    report_.mode_used = mode_;
    report_.strategy_used = opt.strategy;
  }

  EliminationResult run() {
    if (opt_.delete_tautologies) {
      std::vector<ClauseId> taut;
      for (const auto& [id, c] : f_.clauses())
        if (is_tautology(c, mode_)) taut.push_back(id);
      for (auto id : taut) {
        report_.eliminated.push_back({f_.at(id), Elimination::kNoLiteral, 0, Reason::Tautology});
        f_.erase(id);
      }
    }
    index_ = build_index(f_);
    for (const auto& [id, c] : f_.clauses())
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_equality()) enqueue({0, id, i, 0, 0});

    while (!queue_.empty()) {
      if (out_of_time()) {
        report_.timed_out = true;
        break;
      }
      Candidate cand = queue_.top();
      queue_.pop();
      if (!f_.contains(cand.clause)) continue;
      ++report_.candidates_processed;
      process(cand);
    }

    report_.validity_tests = stats_.validity_tests;
    report_.clauses_out = f_.size();
    report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return {std::move(f_), std::move(report_)};
  }

 private:
  void enqueue(Candidate c) {
    const Literal& l = f_.at(c.clause)[c.pos];
    c.priority = opt_.random_order_seed ? rng_() : index_.occurrences(l.predicate(), !l.positive());
    queue_.push(c);
  }

  bool out_of_time() const {
    if (!opt_.time_limit_seconds) return false;
    return std::chrono::duration<double>(Clock::now() - start_).count() > *opt_.time_limit_seconds;
  }

  void process(Candidate cand) {
    const Clause& c = f_.at(cand.clause);
    const Literal& l = c[cand.pos];
    if (const auto* partners = index_.find(l.predicate(), !l.positive())) {
      for (auto it = partners->lower_bound(cand.cursor); it != partners->end(); ++it) {
        ClauseId did = it->first;
        if (did == cand.clause) continue;
        ++cand.partners_tested;
        if (!partner_check(c, cand.pos, f_.at(did), mode_, opt_.strategy, &stats_)) {
          cand.cursor = did + 1;
          parked_[did].push_back(cand);
          return;
        }
      }
    }
    block(cand);
  }

  void block(const Candidate& cand) {
    Clause c = f_.at(cand.clause);
    report_.eliminated.push_back({c, cand.pos, cand.partners_tested, Reason::Blocked});
    index_.remove(c);
    f_.erase(c.id);
    auto it = parked_.find(c.id);
    if (it == parked_.end()) return;
    auto waiting = std::move(it->second);
    parked_.erase(it);
    for (auto& w : waiting)
      if (f_.contains(w.clause)) enqueue(w);
  }

  Formula f_;
  EngineOptions opt_;
  Mode mode_;
  Clock::time_point start_;
  std::mt19937_64 rng_;
  OccurrenceIndex index_;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> queue_;
  std::unordered_map<ClauseId, std::vector<Candidate>> parked_;
  CheckStats stats_;
  BlockReport report_;
};

}  // namespace

EliminationResult eliminate(const Formula& f, const EngineOptions& options) { return Engine(f, options).run(); }

EliminationResult eliminate(const Formula& f, ModeChoice mode, Strategy strategy) {
  EngineOptions opt;
  opt.mode = mode;
  opt.strategy = strategy;
  return eliminate(f, opt);
}

EliminationResult eliminate_pure(const Formula& f) {
  auto start = Clock::now();
  EliminationResult res{f, {}};
  res.report.clauses_in = f.size();
  res.report.mode_used = f.contains_equality() ? Mode::Eq : Mode::NoEq;
  auto index = build_index(f);
  auto pure = [&index](const Literal& l) {
    return !l.is_equality() && index.find(l.predicate(), !l.positive()) == nullptr;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<ClauseId, std::size_t>> doomed;
    for (const auto& [id, c] : res.formula.clauses())
      for (std::size_t i = 0; i < c.size(); ++i)
        if (pure(c[i])) {
          doomed.emplace_back(id, i);
          break;
        }
    for (auto [id, pos] : doomed) {
      const Clause& c = res.formula.at(id);
      res.report.eliminated.push_back({c, pos, 0, Reason::Pure});
      index.remove(c);
      res.formula.erase(id);
      changed = true;
    }
  }
  res.report.clauses_out = res.formula.size();
  res.report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

}  // namespace fobce
