#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netflippa/dcsbm.hpp"
#include "netflippa/flippa.hpp"
#include "netflippa/theory.hpp"

namespace netflippa {

// Structured JSON documents emitted by the command line tool. Doubles are
// serialized with shortest round-trip formatting, so write -> read -> write
// reproduces values to full precision and equal inputs give byte-identical
// files.

struct SelectionReport {
  int n = 0;
  double alpha = 0.0;
  int trials = 0;
  double quantile = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> eigenvalues;
  std::vector<double> flip_leading;
  double threshold = 0.0;
  int k_hat = 0;
  std::string comparison_mode;  // "upper-edge" | "pairwise"
  double margin = 0.0;
};

std::string comparison_mode_name(ComparisonMode mode);
ComparisonMode comparison_mode_from_name(const std::string& name);

SelectionReport make_selection_report(const SelectionResult& result,
                                      double alpha, const FlipConfig& cfg);

void write_selection_report(const std::string& path,
                            const SelectionReport& report);
SelectionReport read_selection_report(const std::string& path);

// DCSBM parameter document mirroring DcsbmParams field names:
// {"n": ..., "K": ..., "q": [...], "g": [...], "M": [[...]]}.
void write_params_json(const std::string& path, const DcsbmParams& params);
DcsbmParams read_params_json(const std::string& path);

struct DecayReport {
  std::string stat;
  std::vector<int> grid;
  int reps = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> estimates;
  double slope = 0.0;
  double intercept = 0.0;
  double band_low = 0.0;
  double band_high = 0.0;
  std::string verdict;  // "PASS" | "FAIL"
};

void write_decay_report(const std::string& path, const DecayReport& report);
DecayReport read_decay_report(const std::string& path);

/// Per-replicate records as CSV with header "stat,n,rep,value".
void write_decay_samples_csv(const std::string& path, const std::string& stat,
                             const std::vector<int>& grid,
                             const std::vector<std::vector<double>>& samples);

/// Embedding coordinates as CSV with header "node,v1,...,vk".
void write_embedding_csv(const std::string& path, const Matrix& coords);

}  // namespace netflippa
