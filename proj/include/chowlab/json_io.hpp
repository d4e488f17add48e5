#pragma once

#include <nlohmann/json.hpp>

#include "chowlab/augmented.hpp"
#include "chowlab/chow.hpp"
#include "chowlab/codes.hpp"
#include "chowlab/csp.hpp"
#include "chowlab/qsym.hpp"

namespace chowlab {

// Schema version stamped into every top-level JSON document; formats are
// described in docs/formats.md.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const BiPoly& p);
nlohmann::json to_json(const Code& c);
nlohmann::json to_json(const FYMonomial& m);
nlohmann::json to_json(const GradedBasis& b);
nlohmann::json to_json(const QSymF& f);
nlohmann::json to_json(const SymH& h);
nlohmann::json to_json(const CyclicActionReport& r);
nlohmann::json to_json(const CnCompareReport& r);
nlohmann::json lattice_to_json(const AtomicLattice& L);

// TSV matrix of coefficients: rows = q-degrees, columns = t-degrees.
std::string to_tsv(const BiPoly& p);
std::string to_tsv(const UniPoly& p);

}  // namespace chowlab
