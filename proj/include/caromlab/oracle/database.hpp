// Recorded oracle data: the consistency database, the pre-sampled answer
// tape, and per-session query transcripts. Databases and tapes are immutable
// values with copy-on-write style updates; both serialize to canonical JSON
// (hex-encoded bitstrings, sorted keys).

#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "caromlab/bits.hpp"
#include "caromlab/rng.hpp"

namespace caromlab::oracle {

class OracleDatabase {
 public:
  OracleDatabase() = default;
  OracleDatabase(int l_in, int l_out) : l_in_(l_in), l_out_(l_out) {}

  int l_in() const { return l_in_; }
  int l_out() const { return l_out_; }
  std::size_t size() const { return entries_.size(); }

  bool contains(const Bits& x) const { return entries_.count(x) != 0; }

  std::optional<Bits> lookup(const Bits& x) const {
    auto it = entries_.find(x);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  // Inserts or confirms an entry; conflicting re-insertion throws.
  void insert(const Bits& x, const Bits& y);

  // Functional update: returns a copy with (x, y) added.
  OracleDatabase with(const Bits& x, const Bits& y) const {
    OracleDatabase out = *this;
    out.insert(x, y);
    return out;
  }

  const std::map<Bits, Bits>& entries() const { return entries_; }

  nlohmann::json to_json() const;
  static OracleDatabase from_json(const nlohmann::json& j);

  bool operator==(const OracleDatabase& o) const {
    return l_in_ == o.l_in_ && l_out_ == o.l_out_ && entries_ == o.entries_;
  }

 private:
  int l_in_ = 0;
  int l_out_ = 0;
  std::map<Bits, Bits> entries_;
};

class AnswerTape {
 public:
  AnswerTape() = default;
  AnswerTape(std::vector<Bits> answers, int l_out);

  static AnswerTape sample(int n, int l_out, Rng& rng);

  int l_out() const { return l_out_; }
  int size() const { return static_cast<int>(answers_.size()); }
  // 1-based, matching the paper's r_1..r_N indexing.
  const Bits& at(int j) const;
  const std::vector<Bits>& answers() const { return answers_; }

  nlohmann::json to_json() const;
  static AnswerTape from_json(const nlohmann::json& j);

  bool operator==(const AnswerTape& o) const {
    return l_out_ == o.l_out_ && answers_ == o.answers_;
  }

 private:
  int l_out_ = 0;
  std::vector<Bits> answers_;
};

struct QueryRecord {
  Bits input;
  Bits output;
  bool fresh = false;  // answered by sampling / tape rather than a prior record
};

using QueryTranscript = std::vector<QueryRecord>;

}  // namespace caromlab::oracle
