#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace hoi {

/// Which species modifies which pairwise interaction.
///
/// TransitiveA/B/C: strict hierarchy A > B > C with A > C; the named species
/// modifies the interaction between the other two.
/// Intransitive: rock-paper-scissors cycle A > B > C > A; C modifies the
/// A-B interaction.
enum class Topology { TransitiveA, TransitiveB, TransitiveC, Intransitive };

/// How the modifier attaches to the pair (p, q), p < q.
/// Symmetric: one shared modifier value scales both alpha(p,q) and alpha(q,p).
/// AsymAffectedFirst: only alpha(p,q) is modified (p is the affected species).
/// AsymAffectedSecond: only alpha(q,p) is modified.
enum class HOIKind { Symmetric, AsymAffectedFirst, AsymAffectedSecond };

/// One interaction modification: species `modifier` drives a multiplier on
/// alpha(affected, affecting). When `symmetric` is set the same multiplier
/// also applies to alpha(affecting, affected); there is still exactly one
/// modifier state variable.
struct HOISpec {
    int affected = 0;
    int affecting = 1;
    int modifier = 2;
    double beta = 0.0;
    bool symmetric = false;
};

/// Full model definition: pairwise interaction matrix plus the attached
/// modifications. alpha(i, j) is the effect of species j on species i;
/// the diagonal is zero (self-limitation is the -n_i term of the dynamics).
/// Immutable in practice: sweep workers mutate beta only on private copies.
struct SystemSpec {
    int n_species = 0;
    Eigen::MatrixXd alpha;
    std::vector<HOISpec> hois;
};

/// Builds one of the canonical 3-species systems. Signs follow the
/// superiority relations of the topology: alpha(i,j) > 0 means j benefits i,
/// so "X > Y" puts +magnitude at alpha(X,Y) and -magnitude at alpha(Y,X).
/// The pair magnitudes are |alpha_AB|, |alpha_AC|, |alpha_BC|.
/// Throws std::invalid_argument on non-finite magnitudes.
SystemSpec build_canonical(Topology topology, HOIKind kind,
                           double alpha_ab, double alpha_ac, double alpha_bc,
                           double beta = 0.0);

inline SystemSpec build_canonical(Topology topology, HOIKind kind,
                                  double alpha, double beta = 0.0) {
    return build_canonical(topology, kind, alpha, alpha, alpha, beta);
}

/// Checks the SystemSpec invariants. Returns one message per violation;
/// empty means valid.
std::vector<std::string> validate(const SystemSpec& spec);

/// Relabels species of a 3-species spec cyclically: species i becomes
/// (i + shift) mod 3, with alpha and HOI indices permuted consistently.
SystemSpec cyclic_relabel(const SystemSpec& spec, int shift);

/// Canonical text names used by the CLI and config files.
std::string topology_name(Topology t);
std::string hoi_kind_name(HOIKind k);
Topology parse_topology(const std::string& name);
HOIKind parse_hoi_kind(const std::string& name);

/// Modifier species and modified pair (p, q), p < q, for a topology.
int modifier_species(Topology t);
std::pair<int, int> modified_pair(Topology t);

/// Species label for CSV/JSON column names: A, B, C, ...
std::string species_label(int index);

}  // namespace hoi
