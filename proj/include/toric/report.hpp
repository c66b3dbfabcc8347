#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "toric/chen_ruan.hpp"
#include "toric/nh_restriction.hpp"
#include "toric/properties.hpp"

namespace toric::report {

using Json = nlohmann::json;

/// "g0", "g1", ... in canonical sector order.
std::string sector_name(std::size_t k);

/// Renders 1_g * 1_h as "(virtual)*(euler)*1_gk", "1_gk" when both factors
/// are trivial, and "0" when the product vanishes.
std::string product_entry(const StructureConstant& sc);

/// "(p)*1_g0 + (q)*1_g2", or "0".
std::string class_string(const CRClass& a);

Json diagnostic_json(const std::optional<Diagnostic>& d);
std::string diagnostic_pretty(const std::optional<Diagnostic>& d);

Json vertices_json(const FaceComplex& fc);
std::string vertices_pretty(const FaceComplex& fc);

Json complex_json(const FaceComplex& fc);
std::string complex_pretty(const FaceComplex& fc);

Json sectors_json(const SectorTable& table);
std::string sectors_pretty(const SectorTable& table);

Json sr_json(const SectorTable& table);
std::string sr_pretty(const SectorTable& table);

Json product_table_json(const ChenRuanRing& ring);
std::string product_table_pretty(const ChenRuanRing& ring);

Json class_json(const ChenRuanRing& ring, const CRClass& a);
std::string class_pretty(const ChenRuanRing& ring, const CRClass& a);

Json nh_json(const ChenRuanRing& ring, const NHClass& a);
std::string nh_pretty(const ChenRuanRing& ring, const NHClass& a);

Json check_json(const std::vector<PropertyResult>& results);
std::string check_pretty(const std::vector<PropertyResult>& results);

} // namespace toric::report
