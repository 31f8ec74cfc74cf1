#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mpg/corpus.hpp"

namespace mpg {

// One audited claim. Mismatches against the reference tables are first-class
// outcomes with replayable evidence, never artifact failures; internal
// conflicts mark reference lines that contradict themselves (duplicates,
// malformed partitions, counts that disagree with their own listing).
struct VerificationReport {
    std::string claim_id;
    std::string source_loc;
    std::string computed;
    std::string claimed;
    std::string status; // "match" | "mismatch" | "internal-conflict"
    nlohmann::json evidence;
};

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timestamp);
std::string reports_to_text(const std::vector<VerificationReport>& reports);
int mismatch_count(const std::vector<VerificationReport>& reports);

// count table row, catalog counts, and the order-13 special graph
std::vector<VerificationReport> verify_counts(Corpus& corpus, const std::string& golden_dir);

// reference partition listings (appendix golden files)
std::vector<VerificationReport> verify_partition_tables(Corpus& corpus, const std::string& golden_dir);

// exhaustive theorem checks over the corpus (unique<->recursive equivalence,
// positivity at 4, partition lower bounds, colored contraction counts,
// extension monotonicity, peeling confluence)
std::vector<VerificationReport> theorem_sweep(Corpus& corpus, int cap = 11);

// ---- listing comparator (exposed for tests) ----

struct ListingItem {
    std::string id;
    int claimed_order = -1;
    std::string degree_sequence;                     // verbatim digit string, may be empty/infeasible
    long claimed_count = -1;                         // -1 when the source gives none
    std::vector<std::vector<std::vector<int>>> lines; // verbatim 1-based label partitions
    nlohmann::json claims;                           // optional extra claims
};

struct ListingMatch {
    bool identified = false;
    std::string cert_hex;
    std::string degree_sequence;
    long computed_count = -1;
    int valid_lines = 0, matched = 0, duplicates = 0, malformed = 0, unmatched = 0, extra_computed = 0;
    std::vector<std::string> diffs;
    std::string status;
};

ListingMatch match_listing(const ListingItem& item, const std::vector<Triangulation>& candidates);

} // namespace mpg
