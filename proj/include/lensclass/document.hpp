/*
   Copyright 2026 The lensclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LENSCLASS_DOCUMENT_HPP
#define LENSCLASS_DOCUMENT_HPP

// Machine-readable output documents and aligned text tables.
//
// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lensclass/abelian.hpp"
#include "lensclass/classdata.hpp"
#include "lensclass/classify.hpp"
#include "lensclass/integer.hpp"

namespace lensclass {

using Json = nlohmann::ordered_json;

struct Provenance {
    std::string file;
    std::vector<std::string> citations;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct OutputDocument {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<std::string> assumptions;
    std::vector<Provenance> data_provenance;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

inline Json to_json(const OutputDocument& doc) {
    Json prov = Json::array();
    for (const auto& p : doc.data_provenance) prov.push_back({{"file", p.file}, {"citations", p.citations}});
    return {{"command", doc.command},
            {"inputs", doc.inputs},
            {"results", doc.results},
            {"assumptions", doc.assumptions},
            {"data_provenance", prov}};
}

inline OutputDocument document_from_json(const Json& j) {
    OutputDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.inputs = j.at("inputs");
    doc.results = j.at("results");
    doc.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    for (const auto& p : j.at("data_provenance"))
        doc.data_provenance.push_back({p.at("file").get<std::string>(), p.at("citations").get<std::vector<std::string>>()});
    return doc;
}

inline std::string emit(const OutputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline OutputDocument parse_document(const std::string& text) { return document_from_json(Json::parse(text)); }

inline Json integer_json(const Integer& v) {
    if (auto small = to_int64(v)) return *small;
    return v.get_str();
}

inline Json group_json(const FgAbGroup& g) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion()) torsion.push_back(integer_json(t));
    return {{"free_rank", g.free_rank()}, {"torsion", torsion}, {"notation", g.tuple_notation()}};
}

inline Json h0_json(const H0Result& h) {
    Json j = {{"kind", h.kind == H0Result::Kind::exact ? "exact" : "interval"}};
    if (h.group) j["group"] = group_json(*h.group);
    j["order_low"] = integer_json(h.order_low);
    j["order_high"] = integer_json(h.order_high);
    j["grh_conditional"] = h.grh_conditional;
    j["rule"] = std::string(1, h.rule);
    j["display"] = h.to_string();
    return j;
}

inline Json h0_descriptor_json(const H0Descriptor& h) {
    if (const auto* r = std::get_if<H0Result>(&h)) return h0_json(*r);
    return {{"kind", "symbolic"}, {"display", std::get<SymbolicH0>(h).text}};
}

inline Json record_json(const ClassGroupRecord& r) {
    Json j = {{"p", r.p}, {"cl_plus", group_json(r.cl_plus)}, {"cl_minus_mod2", group_json(r.cl_minus_mod2)}};
    j["cl_minus"] = r.cl_minus ? group_json(*r.cl_minus) : Json(nullptr);
    j["grh_conditional"] = r.grh_conditional;
    return j;
}

/// Left-aligned text table with a header rule.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}

    void add_row(std::vector<std::string> row) {
        row.resize(headers_.size());
        rows_.push_back(std::move(row));
    }

    void print(std::ostream& os) const {
        std::vector<std::size_t> width(headers_.size());
        for (std::size_t c = 0; c < headers_.size(); ++c) {
            width[c] = headers_[c].size();
            for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                s += cells[c];
                if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
            }
            os << s << '\n';
        };
        line(headers_);
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        os << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
        for (const auto& r : rows_) line(r);
    }

private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace lensclass

#endif
