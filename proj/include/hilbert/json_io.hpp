#pragma once

#include <initializer_list>
#include <string_view>

#include <json.hpp>

#include "hilbert/bipoly.hpp"
#include "hilbert/growth.hpp"
#include "hilbert/invariants.hpp"
#include "hilbert/magma.hpp"
#include "hilbert/monomial.hpp"
#include "hilbert/rational_fn.hpp"
#include "hilbert/series.hpp"

/// JSON forms of the data types. Every exact number is written as a fraction
/// string ("p" or "p/q"); readers also accept JSON integers. Readers reject
/// unknown object keys and malformed shapes with Errc::Validation.
namespace hilbert::io {

using json = nlohmann::json;

/// Validation error unless `j` is an object whose keys all appear in `allowed`.
void require_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view what);

json to_json(const Rat& x);
Rat rat_from_json(const json& j);

/// {"order": N, "coeffs": ["p/q", ...]}
json to_json(const Series& s);
Series series_from_json(const json& j);

/// Coefficients by degree: ["1", "-1"] is 1 - t.
json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

/// {"num": [...], "den": [...]}
json to_json(const RationalFn& rf);
RationalFn rational_from_json(const json& j);

/// [[i, j, "p/q"], ...] with i the t-degree and j the z-degree, sorted by (i, j).
json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const json& j);

/// {"arities": {"2": 1}} or {"closed_form": {"num": [...], "den": [...]}}
json to_json(const magma::OmegaSignature& sig);
magma::OmegaSignature signature_from_json(const json& j);

/// {"d": 2, "forbidden": [[2, 2]], "weights": [1, 1]}; weights optional.
json to_json(const monomial::MonomialPresentation& pres);
monomial::MonomialPresentation presentation_from_json(const json& j);

/// {"k": 1, "vertices": [[1], [2]], "edges": [[from, to, letter], ...]}
json to_json(const monomial::UfnGraph& g);

/// Rows of fraction strings.
json to_json(const invariants::SqMatrix& m);
invariants::SqMatrix matrix_from_json(const json& j);

/// {"size": |G|, "elements": [matrix, ...]}
json to_json(const invariants::MatrixGroup& g);
invariants::MatrixGroup group_from_json(const json& j);

/// {"class": "...", "estimate": x | null, "slope": x | null, "evidence": "..."}
json to_json(const growth::GrowthReport& r);
growth::GrowthReport growth_report_from_json(const json& j);

}  // namespace hilbert::io
