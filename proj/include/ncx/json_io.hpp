#pragma once

// JSON encodings. Decoders throw FormatError with a path such as
// "$.diffs[1].entries" naming the offending value.

#include <string>

#include "json.hpp"

#include "ncx/equivalence.hpp"
#include "ncx/group.hpp"
#include "ncx/lax.hpp"
#include "ncx/ncomplex.hpp"
#include "ncx/suites.hpp"

namespace ncx::json_io {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become FormatError with the byte location.
Json parse(const std::string& text);

Json encode(const Ring& r);
Json encode(const Matrix& m);
Json encode(const PeriodicComplex& x);
Json encode(const ChainMap& f);
/// {source, target, comps}; the witness form adds from and to.
Json encode(const Homotopy& h);
Json encode(const HomotopyWitness& w);
Json encode(const LNChain& c);
Json encode(const LArrMorphism& f);
Json encode(const PairCX& p);
Json encode(const PairMorphism& m);
Json encode(const group::FiniteGroup& g);
Json encode(const group::MulGroup& g);
Json encode(const group::TruncatedSimplicialSet& s);
/// One report line; detail only on failure.
Json encode(const CheckResult& r);
Json encode(const ValidationReport& r);

Ring decode_ring(const Json& j, const std::string& path = "$");
Matrix decode_matrix(const Json& j, const Ring& ring, const std::string& path = "$");
PeriodicComplex decode_complex(const Json& j, const std::string& path = "$");
ChainMap decode_chain_map(const Json& j, const std::string& path = "$");
Homotopy decode_homotopy(const Json& j, const std::string& path = "$");
HomotopyWitness decode_homotopy_witness(const Json& j, const std::string& path = "$");
LNChain decode_chain(const Json& j, const std::string& path = "$");
LArrMorphism decode_larr_morphism(const Json& j, const std::string& path = "$");
PairCX decode_pair(const Json& j, const std::string& path = "$");
PairMorphism decode_pair_morphism(const Json& j, const std::string& path = "$");
group::FiniteGroup decode_group(const Json& j, const std::string& path = "$");
group::MulGroup decode_mul_group(const Json& j, const std::string& path = "$");
group::TruncatedSimplicialSet decode_simplicial_set(const Json& j, const std::string& path = "$");
CheckResult decode_check_result(const Json& j, const std::string& path = "$");

} // namespace ncx::json_io
