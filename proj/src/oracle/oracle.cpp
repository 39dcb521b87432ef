#include "caromlab/oracle/oracle.hpp"

namespace caromlab::oracle {

Bits OnTheFlyOracle::answer(const Bits& x) {
  if (x.width() != db_.l_in()) {
    throw std::invalid_argument("OnTheFlyOracle: input width mismatch");
  }
  if (auto y = db_.lookup(x)) {
    record(x, *y, false);
    return *y;
  }
  Bits y = rng_.bits(db_.l_out());
  db_.insert(x, y);
  record(x, y, true);
  return y;
}

Bits ReplayOracle::answer(const Bits& x) {
  if (x.width() != db_->l_in()) {
    throw std::invalid_argument("ReplayOracle: input width mismatch");
  }
  if (auto y = db_->lookup(x)) {
    record(x, *y, false);
    return *y;
  }
  auto it = run_cache_.find(x);
  if (it != run_cache_.end()) {
    record(x, it->second, false);
    return it->second;
  }
  if (next_index_ >= tape_->size()) {
    throw TapeExhausted("ReplayOracle: more distinct fresh queries than tape answers");
  }
  ++next_index_;
  Bits y = tape_->at(next_index_);
  run_cache_.emplace(x, y);
  record(x, y, true);
  return y;
}

Bits FixedOracle::answer(const Bits& x) {
  if (x.width() != l_in_) {
    throw std::invalid_argument("FixedOracle: input width mismatch");
  }
  Bits y = fn_(x);
  if (y.width() != l_out_) {
    throw std::logic_error("FixedOracle: function returned wrong width");
  }
  record(x, y, false);
  return y;
}

Bits ConditionedOracle::answer(const Bits& x) {
  if (x.width() != db_.l_in()) {
    throw std::invalid_argument("ConditionedOracle: input width mismatch");
  }
  if (auto y = db_.lookup(x)) {
    record(x, *y, false);
    return *y;
  }
  if (next_index_ >= tape_.size()) {
    throw TapeExhausted("ConditionedOracle: tape exhausted");
  }
  ++next_index_;
  Bits y = tape_.at(next_index_);
  db_.insert(x, y);
  record(x, y, true);
  return y;
}

Bits CountingOracle::answer(const Bits& x) {
  if (count_ >= budget_) {
    throw QueryBoundExceeded(who_ + ": declared query bound " +
                             std::to_string(budget_) + " exceeded");
  }
  ++count_;
  Bits y = inner_->answer(x);
  record(x, y, false);
  return y;
}

std::pair<Bits, OracleDatabase> on_the_fly_answer(const OracleDatabase& db,
                                                  const Bits& x, Rng& rng) {
  if (x.width() != db.l_in()) {
    throw std::invalid_argument("on_the_fly_answer: input width mismatch");
  }
  if (auto y = db.lookup(x)) return {*y, db};
  Bits y = rng.bits(db.l_out());
  return {y, db.with(x, y)};
}

Bits replay_answer(const OracleDatabase& db, const AnswerTape& tape,
                   int query_index_j, const Bits& x) {
  if (query_index_j < 1 || query_index_j > tape.size()) {
    throw std::out_of_range("replay_answer: tape index out of range");
  }
  if (auto y = db.lookup(x)) return *y;
  return tape.at(query_index_j);
}

}  // namespace caromlab::oracle
