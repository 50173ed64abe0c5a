#include "zharm/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <istream>
#include <sstream>
#include <thread>

#include "zharm/cover.hpp"

namespace zharm::catalog {

using cover::DataError;
using laurent::LaurentPoly;
using laurent::UnitClass;

namespace {

// RFC-4180-ish CSV reader: comma separator, double-quote quoting with ""
// escapes; quoted fields may span lines. Unquoted fields are trimmed.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Returns false at end of input. Skips blank lines.
    bool next_row(std::vector<std::string>& fields) {
        fields.clear();
        std::string field;
        bool in_quotes = false;
        bool any = false;
        bool field_quoted = false;
        int c;
        while ((c = in_.get()) != EOF) {
            any = true;
            if (in_quotes) {
                if (c == '"') {
                    if (in_.peek() == '"') {
                        in_.get();
                        field += '"';
                    } else {
                        in_quotes = false;
                    }
                } else {
                    field += static_cast<char>(c);
                }
                continue;
            }
            switch (c) {
                case '"':
                    in_quotes = true;
                    field_quoted = true;
                    break;
                case ',':
                    push(fields, field, field_quoted);
                    field_quoted = false;
                    break;
                case '\r':
                    break;
                case '\n':
                    if (fields.empty() && field.empty() && !field_quoted) {
                        any = false;  // blank line
                        continue;
                    }
                    push(fields, field, field_quoted);
                    return true;
                default:
                    field += static_cast<char>(c);
            }
        }
        if (!any && fields.empty() && field.empty()) return false;
        push(fields, field, field_quoted);
        return true;
    }

private:
    static void push(std::vector<std::string>& fields, std::string& field, bool quoted) {
        if (!quoted) {
            auto b = field.find_first_not_of(" \t");
            auto e = field.find_last_not_of(" \t");
            field = (b == std::string::npos) ? std::string() : field.substr(b, e - b + 1);
        }
        fields.push_back(std::move(field));
        field.clear();
    }

    std::istream& in_;
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

std::vector<LinkRecord> parse_table(std::istream& in, bool skip_bad,
                                    std::vector<std::string>* diagnostics) {
    CsvReader reader(in);
    std::vector<std::string> header;
    if (!reader.next_row(header)) throw ParseError("table: missing header row");

    enum Col { NAME, COMPONENTS, BRAID, ALEX, ALEX_FORM };
    std::vector<Col> cols;
    bool has_name = false;
    for (const auto& h : header) {
        const std::string key = lower(h);
        if (key == "name") {
            cols.push_back(NAME);
            has_name = true;
        } else if (key == "components") {
            cols.push_back(COMPONENTS);
        } else if (key == "braid") {
            cols.push_back(BRAID);
        } else if (key == "alexander") {
            cols.push_back(ALEX);
        } else if (key == "alexander_form") {
            cols.push_back(ALEX_FORM);
        } else {
            throw ParseError("table: unknown header column '" + h + "'");
        }
    }
    if (!has_name) throw ParseError("table: header must include 'name'");

    std::vector<LinkRecord> records;
    std::vector<std::string> fields;
    int row_index = 0;
    while (reader.next_row(fields)) {
        ++row_index;
        auto bad = [&](const std::string& msg) {
            const std::string full = "row " + std::to_string(row_index) + ": " + msg;
            if (diagnostics) diagnostics->push_back(full);
            if (!skip_bad) throw ParseError("table: " + full);
        };
        if (fields.size() != cols.size()) {
            bad("expected " + std::to_string(cols.size()) + " fields, got " +
                std::to_string(fields.size()));
            continue;
        }
        LinkRecord r;
        bool ok = true;
        for (size_t i = 0; i < cols.size() && ok; ++i) {
            const std::string& v = fields[i];
            try {
                switch (cols[i]) {
                    case NAME:
                        r.name = v;
                        break;
                    case COMPONENTS:
                        if (!v.empty()) r.components = std::stoi(v);
                        break;
                    case BRAID:
                        if (!v.empty()) r.braid_word = braid::parse_braid(v);
                        break;
                    case ALEX:
                        if (!v.empty()) {
                            laurent::parse_poly(v);  // validate now
                            r.alex = v;
                        }
                        break;
                    case ALEX_FORM:
                        if (!v.empty()) {
                            const std::string f = lower(v);
                            if (f == "alexander")
                                r.alex_form = AlexForm::ALEXANDER;
                            else if (f == "alexander_over_t_minus_1")
                                r.alex_form = AlexForm::ALEXANDER_OVER_T_MINUS_1;
                            else
                                throw ParseError("unknown alexander_form '" + v + "'");
                        }
                        break;
                }
            } catch (const std::exception& e) {
                bad(e.what());
                ok = false;
            }
        }
        if (!ok) continue;
        if (!r.braid_word && !r.alex) {
            bad("record needs a braid word or an alexander polynomial");
            continue;
        }
        records.push_back(std::move(r));
    }
    return records;
}

UnitClass effective_delta(const LinkRecord& r) {
    std::optional<UnitClass> from_alex;
    if (r.alex) {
        LaurentPoly p = laurent::parse_poly(*r.alex);
        if (r.alex_form == AlexForm::ALEXANDER_OVER_T_MINUS_1)
            p = p * laurent::parse_poly("t-1");
        from_alex = laurent::normalize(p);
    }
    std::optional<UnitClass> from_braid;
    if (r.braid_word) from_braid = braid::alexander_from_braid(*r.braid_word);

    if (from_alex && from_braid && !(*from_alex == *from_braid))
        throw DataError("record '" + r.name + "': alexander polynomial '" +
                        laurent::to_string(from_alex->canonical()) +
                        "' disagrees with braid-word value '" +
                        laurent::to_string(from_braid->canonical()) + "'");
    if (from_alex) return *from_alex;
    if (from_braid) return *from_braid;
    throw DataError("record '" + r.name + "': no braid word or alexander polynomial");
}

namespace {

ScanRow scan_one(const LinkRecord& r, const std::vector<int>& k_list) {
    ScanRow row;
    row.name = r.name;
    try {
        const UnitClass delta = effective_delta(r);
        const cover::CoverVerdict v = cover::criterion(delta, r.components);
        row.delta = laurent::to_string(delta.canonical());
        row.determinant = v.determinant;
        row.conclusion = cover::to_string(v.conclusion);
        for (int k : k_list) row.orders[k] = cover::homology_order(delta, k);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<ScanRow> scan(const std::vector<LinkRecord>& records,
                          const std::vector<int>& k_list, int jobs) {
    if (k_list.empty()) throw std::invalid_argument("scan: k_list must be nonempty");
    for (int k : k_list)
        if (k < 2 || k > cover::kMaxCoverDegree)
            throw std::invalid_argument("scan: cover degree must be in [2, 64]");

    std::vector<ScanRow> rows(records.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(records.size())));
    if (workers <= 1) {
        for (size_t i = 0; i < records.size(); ++i) rows[i] = scan_one(records[i], k_list);
        return rows;
    }
    // Records are independent; results land at their input index, so the
    // output order never depends on scheduling.
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
                rows[i] = scan_one(records[i], k_list);
        });
    for (auto& th : pool) th.join();
    return rows;
}

std::vector<GoldenRow> read_golden(std::istream& in) {
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next_row(fields)) throw ParseError("golden: missing header row");
    if (fields.size() != 3 || lower(fields[0]) != "name" || lower(fields[1]) != "alexander" ||
        lower(fields[2]) != "order3")
        throw ParseError("golden: header must be name,alexander,order3");
    std::vector<GoldenRow> rows;
    int idx = 0;
    while (reader.next_row(fields)) {
        ++idx;
        if (fields.size() != 3)
            throw ParseError("golden: row " + std::to_string(idx) + ": expected 3 fields");
        laurent::parse_poly(fields[1]);  // validate
        try {
            rows.push_back(GoldenRow{fields[0], fields[1], BigInt(fields[2])});
        } catch (const std::exception&) {
            throw ParseError("golden: row " + std::to_string(idx) + ": bad order value '" +
                             fields[2] + "'");
        }
    }
    return rows;
}

std::vector<DiffEntry> reproduce_appendix(const std::vector<GoldenRow>& golden) {
    std::vector<DiffEntry> diff;
    const LaurentPoly t_minus_1 = laurent::parse_poly("t-1");
    for (const auto& row : golden) {
        const UnitClass delta =
            laurent::normalize(laurent::parse_poly(row.p_text) * t_minus_1);
        const BigInt got = cover::homology_order(delta, 3);
        if (got != row.expected_order3) diff.push_back({row.name, got, row.expected_order3});
    }
    return diff;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

std::string scan_to_json(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << "{\"name\":\"" << json_escape(r.name) << '"';
        if (r.error) {
            out << ",\"error\":\"" << json_escape(*r.error) << "\"}\n";
            continue;
        }
        out << ",\"delta\":\"" << json_escape(r.delta) << '"';
        out << ",\"determinant\":" << r.determinant.str();
        out << ",\"orders\":{";
        bool first = true;
        for (const auto& [k, v] : r.orders) {
            if (!first) out << ',';
            first = false;
            out << '"' << k << "\":" << v.str();
        }
        out << "},\"conclusion\":\"" << json_escape(r.conclusion) << "\"}\n";
    }
    return out.str();
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string scan_to_csv(const std::vector<ScanRow>& rows, const std::vector<int>& k_list) {
    std::ostringstream out;
    out << "name,delta";
    for (int k : k_list) out << ",order_" << k;
    out << '\n';
    for (const auto& r : rows) {
        out << csv_quote(r.name) << ',';
        if (r.error) {
            out << csv_quote("#error: " + *r.error);
            for (size_t i = 0; i < k_list.size(); ++i) out << ',';
        } else {
            out << csv_quote(r.delta);
            for (int k : k_list) {
                auto it = r.orders.find(k);
                out << ',' << (it == r.orders.end() ? std::string() : it->second.str());
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string diff_to_json(const std::vector<DiffEntry>& diff) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < diff.size(); ++i) {
        if (i) out << ',';
        out << "{\"name\":\"" << json_escape(diff[i].name) << "\",\"got\":" << diff[i].got.str()
            << ",\"expected\":" << diff[i].expected.str() << '}';
    }
    out << "]\n";
    return out.str();
}

}  // namespace zharm::catalog
