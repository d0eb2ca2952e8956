#pragma once

#include "yam/deform_ext.hpp"
#include "yam/operads.hpp"
#include "yam/rota_baxter.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>

namespace yam {

using Json = nlohmann::json;

// Malformed or inconsistent input: bad JSON, wrong shapes, non-rational
// entries, missing files.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers with denominator 1 that fit in 64 bits become JSON numbers; every
// other value is the string "p/q".
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

// Nested arrays, one level per input slot, output coordinate innermost.
Json to_json(const Op& op);
Op op_from_json(const Json& j, const std::vector<Index>& input_dims, Index output_dim, const std::string& where);

// Array of rows.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where);
Vector vector_from_json(const Json& j, Index size, const std::string& where);
Json to_json(const Vector& v);

// {"kind": tag, "dim": n, "ops": {name: tensor}}
Json to_json(const AlgebraPresentation& a);
AlgebraPresentation algebra_from_json(const Json& j, const std::string& where = "algebra");

// {"algebra": object or path, "module_dim": m, "actions": {...}}. Paths are
// resolved against base_dir. When the algebra is absent, fallback is used.
Json to_json(const AssYRepresentation& r);
AssYRepresentation representation_from_json(const Json& j, const std::filesystem::path& base_dir,
                                             const AlgebraPresentation* fallback = nullptr);

// {"mu": ..., "F": ..., "G": ...}
Json to_json(const CochainTriple& t);
CochainTriple cochain_from_json(const Json& j, Index n, Index m, const std::string& where);

// {"algebra": ..., "order": N, "terms": [{"mu", "F", "G"}, ...]}
Json to_json(const TruncatedDeformation& d);
TruncatedDeformation deformation_from_json(const Json& j, const std::filesystem::path& base_dir);

// {"total": algebra, "i": matrix, "p": matrix, "s": optional matrix}
Json to_json(const ExtensionPresentation& e);
ExtensionPresentation extension_from_json(const Json& j, const std::filesystem::path& base_dir);

// {"kind": "end"|"dend", "dim": n, "pi": ..., "theta": ..., "vartheta": ...};
// on Dend each entry is an array of tensors, one per token.
Json to_json(OperadKind kind, Index dim, const YamagutiMultiplication& ym);
std::pair<Operad, YamagutiMultiplication> ym_from_json(const Json& j);

// {"algebra": ..., "rep": ..., "R": matrix}; the rep may omit its algebra.
Json to_json(const RelativeRBO& r);
RelativeRBO rbo_from_json(const Json& j, const std::filesystem::path& base_dir);

Json to_json(const IdentityFailure& f);
Json to_json(const AxiomReport& r);

// Objects one key per line, arrays on a single line; deterministic.
std::string pretty(const Json& j);

// Reads and parses a JSON file, or throws InputError.
Json read_json_file(const std::filesystem::path& path);

// An object given inline or as a path relative to base_dir.
Json resolve(const Json& j, const std::filesystem::path& base_dir, std::filesystem::path* dir_out = nullptr);

}  // namespace yam
