#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <json.hpp>

#include "psi/graded_linalg.hpp"
#include "psi/group_action.hpp"
#include "psi/hilbert_sym.hpp"
#include "psi/partition.hpp"
#include "psi/permutation.hpp"
#include "psi/psi_checks.hpp"
#include "psi/symmetric_ideal.hpp"

namespace psi {

using Json = nlohmann::ordered_json;

// [a1, a2, ...], trimmed.
Json to_json(const Partition& a);
Partition partition_from_json(const Json& j);

// One-line image array, e.g. [2,1,3].
Json to_json(const Permutation& p);

// {degree, dim, basis: [polynomial strings]}
Json to_json(const GradedPiece& piece);

// {d, field, provenance, generators, mu, hilbert: {degree: value}}
Json to_json(const SymmetricIdeal& ideal, std::uint64_t hilbert_cutoff);

// {d, size, elements: [[...]], cycles: [...], characters: [...], is_full_group, is_alternating}
Json to_json(const StabilizerReport& stab);

// {verdict, witness?, certificate: {kind, ...} | null, notes}
Json to_json(const PsiVerdict& verdict);
PsiVerdict verdict_from_json(const Json& j, std::size_t d);

// {"0": v0, "1": v1, ...}
Json to_json(const HFTable& table);

}  // namespace psi
