#pragma once

#include "cocal/g2.hpp"
#include "cocal/lie.hpp"

#include <json.hpp>

namespace cocal {

using json = nlohmann::json;

std::string quad_str(const Quad& q);
Quad quad_parse(const std::string& s);

json kform_to_json(const KForm<Quad>& f);
KForm<Quad> kform_from_json(const json& j);
json qform_to_json(const QForm& f);
QForm qform_from_json(const json& j);

json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const json& j);

json certificate_to_json(const Certificate& c, const LieAlgebra& g);
std::pair<Certificate, LieAlgebra> certificate_from_json(const json& j);

}  // namespace cocal
