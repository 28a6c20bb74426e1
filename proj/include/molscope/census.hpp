#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "molscope/canonical.hpp"
#include "molscope/exact.hpp"
#include "molscope/mols.hpp"

namespace molscope {

struct CensusOptions {
  int threads = 0;  // 0: hardware concurrency
  // When set, long loops journal finished work here and resume from it.
  std::optional<std::filesystem::path> checkpoint_dir;
  std::function<void(const std::string&)> log;
};

int resolve_threads(int requested);

/// Calls fn(i) for i in [0, count) on a pool of worker threads.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

/// Every reduced square of order n in lexicographic order of its cells.
/// Stops early when visit returns false.
void for_each_reduced_square(int n, const std::function<bool(const LatinSquare&)>& visit);

/// Paratopism-invariant hash built from the cycle types of the permutations
/// between pairs of rows, pairs of columns and pairs of symbols.
std::uint64_t cycle_structure_key(const LatinSquare& square);

struct SpeciesEntry {
  CanonicalCertificate certificate;
  LatinSquare rep;
  ExactInt par;
  ExactInt atp;
  std::uint64_t theta = 0;
  long transversals = 0;
  long intercalates = 0;
  ExactInt reduced_count;  // reduced squares in the species: 6 n n! / par
};

struct SpeciesCatalogue {
  int n = 0;
  std::vector<SpeciesEntry> entries;  // sorted by certificate
  ExactInt reduced_squares;           // sum of reduced_count

  const SpeciesEntry* find(const CanonicalCertificate& cert) const;
};

/// One representative per species of latin squares of order n: the
/// lexicographically least reduced square in it. Reduced squares are
/// bucketed by cycle_structure_key and certified only until every bucket's
/// square count is accounted for. Throws OutOfRange unless 1 <= n <= 8.
SpeciesCatalogue generate_species_reps(int n, const CensusOptions& options = {});

/// Catalogue from supplied squares of one order, one per species or not;
/// duplicates collapse onto the least reduced form seen.
SpeciesCatalogue catalogue_from_squares(std::span<const LatinSquare> squares,
                                        const CensusOptions& options = {});

struct MolsSpecies {
  CanonicalCertificate certificate;
  MolsList rep;
  ExactInt par;
  bool maximal = false;
};

struct MolsCensus {
  int n = 0;
  int k_max = 0;
  // by_k[k] holds the species of k-MOLS, sorted by certificate.
  std::map<int, std::vector<MolsSpecies>> by_k;

  std::vector<MolsSpecies> maximal(int k) const;
};

/// Breadth-first extension from the latin square species up to k_max
/// squares. Children are merged by species certificate, keeping the least
/// list.
MolsCensus build_mols_census(const SpeciesCatalogue& catalogue, int k_max,
                             const CensusOptions& options = {});

struct CensusRow {
  int n = 0;
  int k = 0;
  bool maximal_only = false;
  bool lists = false;
  ExactInt equality;  // reduced sets, or reduced lists
  long isotopism = 0;
  long trisotopism = 0;
  long paratopism = 0;
};

/// Counts classes inside each species by acting on the column orderings of
/// its orthogonal array: autoparatopisms on one side, the moves allowed by
/// the notion on the other. Each orbit representative is certified in the
/// matching mode and the certificates must be pairwise distinct.
CensusRow classify_counts(int n, int k, std::span<const MolsSpecies> reps, bool maximal_only, bool lists,
                          int threads = 0);

/// (#common transversals, #max disjoint) -> number of species.
std::map<std::pair<int, int>, int> common_transversal_table(std::span<const MolsSpecies> reps,
                                                            int threads = 0);

/// #distinct latin square species among the aspects -> number of species.
std::map<int, int> species_involvement_table(std::span<const MolsSpecies> reps, int threads = 0);

enum class PlanarityType { P, N, M };
const char* to_string(PlanarityType type);

/// Species certificates of every aspect of the complete sets of order n.
std::vector<CanonicalCertificate> planar_certificates(const MolsCensus& census);

/// P if every aspect is planar, N if none is, M otherwise. Throws
/// UnsupportedOrder for n = 9 and above.
PlanarityType planarity_type(const MolsList& mols, std::span<const CanonicalCertificate> planar);

/// Types of the sets obtained by choosing each pair of array columns as
/// rows and columns, e.g. "PM" when P and M sets occur and N does not.
std::string planarity_profile(const MolsList& mols, std::span<const CanonicalCertificate> planar);

/// floor(log2 theta) -> number of species, over species with theta > 0.
std::map<int, int> log2_theta_table(const SpeciesCatalogue& catalogue);

struct MateStats {
  ExactRational species_with_mate;  // proportion of species
  ExactRational p_mate;
  ExactRational e_theta;
};
MateStats mate_stats(const SpeciesCatalogue& catalogue);

// Certificate and statistics go in '#' lines, so parse_squares reads the
// representatives straight back.
std::string format_catalogue(const SpeciesCatalogue& catalogue);
std::string format_mols_species(std::span<const MolsSpecies> species);
/// Reads format_catalogue output back. Throws Parse.
SpeciesCatalogue parse_catalogue(std::string_view text);

}  // namespace molscope
