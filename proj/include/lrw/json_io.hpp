#pragma once

#include <json.hpp>

#include "lrw/connection.hpp"
#include "lrw/enveloping.hpp"
#include "lrw/kledger.hpp"
#include "lrw/window_module.hpp"

namespace lrw {

using Json = nlohmann::ordered_json;

// presentation schema:
// {"variables":[{"name":"x","invertible":true},...], "rank_L":l,
//  "anchor":[[poly,...],...], "bracket":{"i,j":[poly,...]}}
Json presentation_json(const Presentation& pres);
Presentation presentation_from_json(const Json& j);

// {"degree":p, "values":{"1,2":"poly",...}}
Json cochain_json(const Cochain& w);
Cochain cochain_from_json(const Presentation& pres, const Json& j);

// components keyed by even degree: {"0":"poly-cochain", "2":{...}, ...}
Json even_poly_json(const EvenClassPolynomial& e);

// word: [{"coef":"poly"} | {"gen":i} | {"z":1}, ...]
Word word_from_json(const Context& ctx, const Json& j);

// {"p1,...,pl":"poly"}; central-mode terms with z append "|z^m" to the key
Json uelement_json(const UElement& u);

// {"rank":r, "omega":[[["poly",...],...], ...]} (one row-major matrix per direction)
Json connection_json(const Connection& conn);
Connection connection_from_json(const Presentation& pres, const Json& j);

Json axiom_report_json(const AxiomReport& r);
Json confluence_report_json(const ConfluenceReport& r);
Json cohomology_window_json(const CohomologyWindow& w);
Json curvature_form_json(const CurvatureForm& f);
Json kclass_json(const KClass& u);
Json window_module_json(const WindowModule& mod, const WindowCurvatureReport& report);
Json kernel_sum_json(const KernelSumReport& r);
Json kernel_product_json(const KernelProductReport& r);

Json load_json_file(const std::string& path);

}  // namespace lrw
