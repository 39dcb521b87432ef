// Classical-accessible oracle handles. Three realizations plus plumbing:
//
//   OnTheFlyOracle   lazy random function over a consistency database
//   ReplayOracle     database priority, tape fallback by distinct-query index
//   FixedOracle      a concrete function (used for learner black boxes)
//   ConditionedOracle random oracle conditioned on a database, fresh answers
//                    drawn from a tape in order (paired-emulation checks)
//   CountingOracle   enforces a declared query budget on an inner handle
//
// Every handle records a QueryTranscript of (input, output, fresh) triples.

#pragma once

#include <functional>
#include <memory>

#include "caromlab/oracle/database.hpp"

namespace caromlab::oracle {

class TapeExhausted : public std::runtime_error {
 public:
  explicit TapeExhausted(const std::string& what) : std::runtime_error(what) {}
};

class QueryBoundExceeded : public std::runtime_error {
 public:
  explicit QueryBoundExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

class OracleHandle {
 public:
  virtual ~OracleHandle() = default;
  virtual Bits answer(const Bits& x) = 0;
  virtual int l_in() const = 0;
  virtual int l_out() const = 0;
  const QueryTranscript& transcript() const { return transcript_; }

 protected:
  void record(const Bits& x, const Bits& y, bool fresh) {
    transcript_.push_back(QueryRecord{x, y, fresh});
  }
  QueryTranscript transcript_;
};

// Lazy simulation of a uniformly random function.
class OnTheFlyOracle : public OracleHandle {
 public:
  OnTheFlyOracle(int l_in, int l_out, Rng rng)
      : db_(l_in, l_out), rng_(rng) {}

  Bits answer(const Bits& x) override;
  int l_in() const override { return db_.l_in(); }
  int l_out() const override { return db_.l_out(); }
  const OracleDatabase& database() const { return db_; }

 private:
  OracleDatabase db_;
  Rng rng_;
};

// The plain-model evaluator's oracle: answers from the database when
// recorded, otherwise from the tape indexed by distinct fresh queries within
// this run (repeats are served from a per-run cache).
class ReplayOracle : public OracleHandle {
 public:
  ReplayOracle(const OracleDatabase* db, const AnswerTape* tape)
      : db_(db), tape_(tape) {}

  Bits answer(const Bits& x) override;
  int l_in() const override { return db_->l_in(); }
  int l_out() const override { return db_->l_out(); }
  int fresh_queries() const { return next_index_; }

 private:
  const OracleDatabase* db_;
  const AnswerTape* tape_;
  std::map<Bits, Bits> run_cache_;
  int next_index_ = 0;
};

class FixedOracle : public OracleHandle {
 public:
  FixedOracle(int l_in, int l_out, std::function<Bits(const Bits&)> fn)
      : l_in_(l_in), l_out_(l_out), fn_(std::move(fn)) {}

  Bits answer(const Bits& x) override;
  int l_in() const override { return l_in_; }
  int l_out() const override { return l_out_; }

 private:
  int l_in_;
  int l_out_;
  std::function<Bits(const Bits&)> fn_;
};

// A random oracle conditioned to be consistent with `db`; undetermined values
// are taken from `tape` in first-seen order. Used to couple a live oracle
// with a ReplayOracle for the flawless-emulation check.
class ConditionedOracle : public OracleHandle {
 public:
  ConditionedOracle(OracleDatabase db, AnswerTape tape)
      : db_(std::move(db)), tape_(std::move(tape)) {}

  Bits answer(const Bits& x) override;
  int l_in() const override { return db_.l_in(); }
  int l_out() const override { return db_.l_out(); }

 private:
  OracleDatabase db_;
  AnswerTape tape_;
  int next_index_ = 0;
};

// Budget enforcement at the scheme boundary; throws QueryBoundExceeded.
class CountingOracle : public OracleHandle {
 public:
  CountingOracle(OracleHandle& inner, int budget, std::string who)
      : inner_(&inner), budget_(budget), who_(std::move(who)) {}

  Bits answer(const Bits& x) override;
  int l_in() const override { return inner_->l_in(); }
  int l_out() const override { return inner_->l_out(); }
  int count() const { return count_; }

 private:
  OracleHandle* inner_;
  int budget_;
  std::string who_;
  int count_ = 0;
};

// Functional forms of the two core answer rules.
std::pair<Bits, OracleDatabase> on_the_fly_answer(const OracleDatabase& db,
                                                  const Bits& x, Rng& rng);
Bits replay_answer(const OracleDatabase& db, const AnswerTape& tape,
                   int query_index_j, const Bits& x);

}  // namespace caromlab::oracle
