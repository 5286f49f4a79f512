#ifndef GERST_HOPF_IO_HPP
#define GERST_HOPF_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "gerst/checks.hpp"
#include "gerst/cochain.hpp"
#include "gerst/doubles.hpp"

namespace gerst {

using json = nlohmann::json;

/// HopfFile documents: JSON with string scalars and canonical key order.
json hopf_to_json(const HopfAlgebra& h, const std::optional<std::string>& provenance = {});
HopfPtr hopf_from_json(const json& j, bool validate = true);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

void write_hopf(const HopfAlgebra& h, const std::string& path,
                const std::optional<std::string>& provenance = {});
HopfPtr parse_hopf(const std::string& path, bool validate = true);

json to_json(const AxiomReport& r);
json to_json(const CheckReport& r);
json to_json(const CohomologyReport& r);

std::string render_text(const AxiomReport& r);
std::string render_text(const CheckReport& r);
std::string render_text(const CohomologyReport& r);

}  // namespace gerst

#endif
