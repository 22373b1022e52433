#pragma once

#include <string>
#include <vector>

#include "gcdc/axioms.hpp"
#include "gcdc/corpus.hpp"
#include "gcdc/smooth.hpp"
#include "gcdc/verdict.hpp"

namespace gcdc {

/// Suite names accepted by run_suite: cd, dr, faa-r, comonad, linear, split.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Built-in corpus text a suite runs on when no corpus file is given.
const std::string& default_corpus_for(const std::string& suite);

std::vector<Check> run_cd_suite(const Corpus& c, const LAssignment& L, const Config& cfg);
std::vector<Check> run_dr_suite(const Corpus& c, const LAssignment& L, const Config& cfg);
std::vector<Check> run_faa_r_suite(const Corpus& c, const LAssignment& L, const Config& cfg);
std::vector<Check> run_comonad_suite(const Corpus& c, const LAssignment& L, const Config& cfg);
std::vector<Check> run_linear_suite(const Corpus& c, const LAssignment& L, const Config& cfg);
std::vector<Check> run_split_suite(const Corpus& c, const LAssignment& L, const Config& cfg);

/// Dispatches on the suite name and returns the checks sorted.
std::vector<Check> run_suite(const std::string& name, const Corpus& c, const LAssignment& L, const Config& cfg);

/// Integer matrix map R^cols -> R^rows drawn from the seeded stream `label`,
/// entries in [-3, 3].
SmoothMap random_matrix_map(std::size_t rows, std::size_t cols, const Config& cfg, const std::string& label);

}  // namespace gcdc
