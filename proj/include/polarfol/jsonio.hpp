#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <polarfol/classify.hpp>
#include <polarfol/clifford.hpp>
#include <polarfol/fkm.hpp>
#include <polarfol/liealg.hpp>
#include <polarfol/quat.hpp>

namespace polarfol {

using ordered_json = nlohmann::ordered_json;

// Rationals render as "a/b", or "a" when the denominator is one.
std::string rational_str(const Rational& r);
ordered_json vec_json(const Vec& v);
ordered_json matrix_json(const Matrix& m);  // array of rows of entry strings

// {family, params, dim, rank, n, N_J, N_S, structures, provenance,
//  canonicalization_group}; n is null unless dim = 0 mod 4.  Computed
// structures carry {H, witness, homogeneous} with the full witness object;
// tabulated ones carry the constructor tag as the witness marker.
ordered_json record_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const ordered_json& j);

// Mirrors the grouped table columns: G/K, N_S, condition.  Plain records
// have no condition column of their own and render "-".
std::string records_csv(const std::vector<ClassificationRecord>& rs);
std::string table_csv(const std::vector<TableRow>& rows);
ordered_json table_json(const std::vector<TableRow>& rows);

ordered_json scan_json(const std::vector<ScanResult>& rows);
ordered_json moduli_json(const Moduli& m);
ordered_json clifford_json(const CliffordSystem& s);
ordered_json clifford_report_json(const CliffordReport& r);
ordered_json munzner_json(const MunznerReport& r);
ordered_json witness_json(const Su2Witness& w);
ordered_json triple_json(const QuatTriple& t, const TripleReport& rep);
ordered_json preservation_json(const PreservationReport& r);

// Serialize records to path, UTF-8 with LF newlines, trailing newline.
// format is "json" or "csv".  Throws std::invalid_argument on an empty
// record list or unknown format, std::runtime_error on I/O failure.
void export_records(const std::vector<ClassificationRecord>& rs, const std::string& format,
                    const std::string& path);

}  // namespace polarfol
