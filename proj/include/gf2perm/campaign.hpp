// Copyright 2026 The gf2perm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GF2PERM_CAMPAIGN_HPP_
#define GF2PERM_CAMPAIGN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gf2perm/field.hpp"
#include "gf2perm/textio.hpp"

namespace gf2perm {

// One oracle-equivalence sweep: for every case in the parameter grid of a
// theorem, the closed-form verdict is compared with a brute-force oracle.
struct VerifyCampaign {
  // thm1, thm4, thm5, thm5_solvable, thm6, thm7, thm_tr, corollary,
  // prop2, prop3, family:<name>
  std::string theorem_id;
  std::vector<FieldSpec> fields;
  std::vector<unsigned> ks;  // empty: every admissible k
  std::vector<unsigned> ls;  // empty: theorem default
  // Seeded random cases appended to the exhaustive grid (dense polynomials,
  // 3-term monomial sums).
  std::uint64_t sample_budget = 0;
  std::uint64_t seed = 1;
  // Grids larger than exhaustive_limit are sampled (exhaustive_limit cases,
  // drawn with the seed) unless exhaustive is set.
  bool exhaustive = false;
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 16;
  // Also run the l_u reduction on every quadratic-family case (thm6, thm7).
  bool cross_check_quadspec = true;
  unsigned jobs = 1;
  Limits limits;
};

struct Mismatch {
  std::string field;
  std::string case_desc;
  std::string structured;
  std::string oracle;
  std::string replay;  // a single CLI invocation reproducing the oracle verdict
};

struct FieldTally {
  std::string field;
  std::uint64_t grid_size = 0;
  bool sampled = false;
  std::uint64_t cases_total = 0;
  std::uint64_t cases_agreeing = 0;
  std::uint64_t oracle_positive = 0;  // oracle verdict true (or nonzero value)
};

struct CampaignReport {
  std::string theorem_id;
  std::uint64_t seed = 0;
  std::uint64_t cases_total = 0;
  std::uint64_t cases_agreeing = 0;
  std::vector<FieldTally> per_field;
  std::vector<Mismatch> mismatches;
  double wall_time_s = 0;
};

const std::vector<std::string>& known_theorems();
CampaignReport run_verify(const VerifyCampaign& campaign);
// wall_time is omitted unless requested, so reports are byte-reproducible.
Json to_json(const CampaignReport& report, bool include_timing = false);

struct SearchRequest {
  FieldSpec field;
  // abnorm, quad2, binomial, traceform, trform, aqk
  std::string template_name;
  // Half-open range [lo, hi) of the first coefficient's encoding.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
  unsigned k = 1;
  unsigned j = 1;
  unsigned l = 1;
  Limits limits;
};

struct SearchRow {
  std::vector<Elem> coeffs;
  bool is_permutation = true;
  std::vector<std::string> matched_criteria;
};

struct SearchResult {
  std::vector<std::string> columns;  // coefficient names
  std::vector<SearchRow> rows;       // permutations only, by coefficient encoding
  // Criterion verdicts contradicted by the brute-force oracle.
  std::vector<Mismatch> false_claims;
};

const std::vector<std::string>& known_templates();
SearchResult run_search(const SearchRequest& request);
std::string search_to_csv(const SearchResult& result);
Json to_json(const SearchResult& result);

}  // namespace gf2perm

#endif  // GF2PERM_CAMPAIGN_HPP_
