#include "hoi/netmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace hoi {

namespace {

void set_pair(Eigen::MatrixXd& alpha, int superior, int inferior, double magnitude) {
    // superior benefits from inferior
    alpha(superior, inferior) = magnitude;
    alpha(inferior, superior) = -magnitude;
}

}  // namespace

int modifier_species(Topology t) {
    switch (t) {
        case Topology::TransitiveA: return 0;
        case Topology::TransitiveB: return 1;
        case Topology::TransitiveC: return 2;
        case Topology::Intransitive: return 2;
    }
    throw std::invalid_argument("unknown topology");
}

std::pair<int, int> modified_pair(Topology t) {
    switch (t) {
        case Topology::TransitiveA: return {1, 2};
        case Topology::TransitiveB: return {0, 2};
        case Topology::TransitiveC: return {0, 1};
        case Topology::Intransitive: return {0, 1};
    }
    throw std::invalid_argument("unknown topology");
}

SystemSpec build_canonical(Topology topology, HOIKind kind,
                           double alpha_ab, double alpha_ac, double alpha_bc,
                           double beta) {
    for (double v : {alpha_ab, alpha_ac, alpha_bc, beta}) {
        if (!std::isfinite(v))
            throw std::invalid_argument("build_canonical: non-finite parameter");
    }

    SystemSpec spec;
    spec.n_species = 3;
    spec.alpha = Eigen::MatrixXd::Zero(3, 3);

    if (topology == Topology::Intransitive) {
        // A > B > C > A
        set_pair(spec.alpha, 0, 1, alpha_ab);
        set_pair(spec.alpha, 1, 2, alpha_bc);
        set_pair(spec.alpha, 2, 0, alpha_ac);
    } else {
        // A > B > C, A > C
        set_pair(spec.alpha, 0, 1, alpha_ab);
        set_pair(spec.alpha, 0, 2, alpha_ac);
        set_pair(spec.alpha, 1, 2, alpha_bc);
    }

    auto [p, q] = modified_pair(topology);
    HOISpec hoi;
    hoi.modifier = modifier_species(topology);
    hoi.beta = beta;
    switch (kind) {
        case HOIKind::Symmetric:
            hoi.affected = p;
            hoi.affecting = q;
            hoi.symmetric = true;
            break;
        case HOIKind::AsymAffectedFirst:
            hoi.affected = p;
            hoi.affecting = q;
            break;
        case HOIKind::AsymAffectedSecond:
            hoi.affected = q;
            hoi.affecting = p;
            break;
    }
    spec.hois.push_back(hoi);
    return spec;
}

std::vector<std::string> validate(const SystemSpec& spec) {
    std::vector<std::string> violations;
    const int n = spec.n_species;
    if (n < 2) violations.push_back("n_species must be at least 2");
    if (spec.alpha.rows() != n || spec.alpha.cols() != n) {
        violations.push_back("alpha must be a square matrix of size n_species");
        return violations;
    }
    for (int i = 0; i < n; ++i) {
        if (spec.alpha(i, i) != 0.0)
            violations.push_back("nonzero diagonal at alpha(" + species_label(i) + "," +
                                 species_label(i) + ")");
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(spec.alpha(i, j)))
                violations.push_back("non-finite alpha(" + species_label(i) + "," +
                                     species_label(j) + ")");
        }
    }

    // Ordered pairs claimed by modifications; symmetric HOIs claim both.
    std::vector<std::pair<int, int>> claimed;
    for (const auto& h : spec.hois) {
        if (h.affected < 0 || h.affected >= n || h.affecting < 0 || h.affecting >= n ||
            h.modifier < 0 || h.modifier >= n) {
            violations.push_back("HOI species index out of range");
            continue;
        }
        if (h.affected == h.affecting || h.affected == h.modifier ||
            h.affecting == h.modifier)
            violations.push_back("HOI species indices must be pairwise distinct");
        if (!std::isfinite(h.beta)) violations.push_back("non-finite beta");

        std::vector<std::pair<int, int>> targets = {{h.affected, h.affecting}};
        if (h.symmetric) targets.push_back({h.affecting, h.affected});
        for (auto t : targets) {
            for (auto c : claimed) {
                if (c == t)
                    violations.push_back("duplicate modifier target on pair (" +
                                         species_label(t.first) + "," +
                                         species_label(t.second) + ")");
            }
            claimed.push_back(t);
        }
    }
    return violations;
}

SystemSpec cyclic_relabel(const SystemSpec& spec, int shift) {
    if (spec.n_species != 3)
        throw std::invalid_argument("cyclic_relabel requires a 3-species spec");
    const auto perm = [&](int i) { return ((i + shift) % 3 + 3) % 3; };

    SystemSpec out = spec;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.alpha(perm(i), perm(j)) = spec.alpha(i, j);
    for (std::size_t h = 0; h < spec.hois.size(); ++h) {
        out.hois[h].affected = perm(spec.hois[h].affected);
        out.hois[h].affecting = perm(spec.hois[h].affecting);
        out.hois[h].modifier = perm(spec.hois[h].modifier);
    }
    return out;
}

std::string topology_name(Topology t) {
    switch (t) {
        case Topology::TransitiveA: return "transitive-a";
        case Topology::TransitiveB: return "transitive-b";
        case Topology::TransitiveC: return "transitive-c";
        case Topology::Intransitive: return "intransitive";
    }
    throw std::invalid_argument("unknown topology");
}

std::string hoi_kind_name(HOIKind k) {
    switch (k) {
        case HOIKind::Symmetric: return "sym";
        case HOIKind::AsymAffectedFirst: return "asym-ab";
        case HOIKind::AsymAffectedSecond: return "asym-ba";
    }
    throw std::invalid_argument("unknown HOI kind");
}

Topology parse_topology(const std::string& name) {
    if (name == "transitive-a") return Topology::TransitiveA;
    if (name == "transitive-b") return Topology::TransitiveB;
    if (name == "transitive-c") return Topology::TransitiveC;
    if (name == "intransitive") return Topology::Intransitive;
    throw std::invalid_argument("unknown topology name: " + name);
}

HOIKind parse_hoi_kind(const std::string& name) {
    if (name == "sym") return HOIKind::Symmetric;
    if (name == "asym-ab") return HOIKind::AsymAffectedFirst;
    if (name == "asym-ba") return HOIKind::AsymAffectedSecond;
    throw std::invalid_argument("unknown HOI kind name: " + name);
}

std::string species_label(int index) {
    if (index >= 0 && index < 26) return std::string(1, char('A' + index));
    return "S" + std::to_string(index);
}

}  // namespace hoi
