#include "singlet/export.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace singlet {

namespace {

using Json = nlohmann::ordered_json;

HalfInt parse_half(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) return HalfInt(2 * std::stoi(token));
    if (token.substr(slash + 1) != "2") throw std::domain_error("word_from_string: bad magnetic value");
    return HalfInt(std::stoi(token.substr(0, slash)));
}

}  // namespace

std::string word_to_string(const BasisWord& word, HalfInt spin) {
    std::string out;
    if (spin == kSpinHalf) {
        for (const auto letter : word.letters_twice) out += letter > 0 ? '+' : '-';
        return out;
    }
    for (int site = 0; site < word.size(); ++site) {
        if (site > 0) out += ',';
        out += word.letter(site).to_string();
    }
    return out;
}

BasisWord word_from_string(const std::string& text, HalfInt spin) {
    std::vector<std::int8_t> letters;
    if (spin == kSpinHalf) {
        for (const char c : text) {
            if (c == '+') {
                letters.push_back(1);
            } else if (c == '-') {
                letters.push_back(-1);
            } else {
                throw std::domain_error("word_from_string: bad spin-1/2 token");
            }
        }
        return BasisWord(std::move(letters));
    }
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const HalfInt m = parse_half(token);
        if (std::abs(m.twice) > spin.twice) throw std::domain_error("word_from_string: letter exceeds spin");
        letters.push_back(static_cast<std::int8_t>(m.twice));
    }
    return BasisWord(std::move(letters));
}

StateExportDocument make_export_document(const SingletBasis& basis) {
    StateExportDocument doc;
    doc.spin_twice = basis.spin.twice;
    doc.n = basis.particles;
    for (const CoupledState& state : basis.states) {
        ExportState es;
        es.j_twice = state.j.twice;
        es.m_twice = state.m.twice;
        es.index = state.index;
        for (const auto& [word, amp] : state.amps) {
            ExportAmplitude ea;
            ea.word = word_to_string(word, basis.spin);
            for (const auto& [radicand, coeff] : amp.terms()) {
                ExportTerm term;
                term.num = rational_num(coeff).str();
                term.den = rational_den(coeff).str();
                if (radicand > BigInt(INT64_MAX)) {
                    throw std::domain_error("make_export_document: radicand exceeds int64");
                }
                term.radicand = radicand.convert_to<std::int64_t>();
                ea.terms.push_back(std::move(term));
            }
            es.amplitudes.push_back(std::move(ea));
        }
        doc.states.push_back(std::move(es));
    }
    return doc;
}

std::string to_json(const StateExportDocument& doc) {
    Json root;
    root["schema_version"] = doc.schema_version;
    root["spin"] = doc.spin_twice;
    root["n"] = doc.n;
    Json states = Json::array();
    for (const ExportState& state : doc.states) {
        Json js;
        js["j"] = state.j_twice;
        js["m"] = state.m_twice;
        js["index"] = state.index;
        Json amps = Json::array();
        for (const ExportAmplitude& amp : state.amplitudes) {
            Json ja;
            ja["word"] = amp.word;
            Json terms = Json::array();
            for (const ExportTerm& term : amp.terms) {
                Json jt;
                jt["num"] = term.num;
                jt["den"] = term.den;
                jt["radicand"] = term.radicand;
                terms.push_back(std::move(jt));
            }
            ja["terms"] = std::move(terms);
            amps.push_back(std::move(ja));
        }
        js["amplitudes"] = std::move(amps);
        states.push_back(std::move(js));
    }
    root["states"] = std::move(states);
    return root.dump(2) + "\n";
}

StateExportDocument parse_json(const std::string& text) {
    const Json root = Json::parse(text);
    StateExportDocument doc;
    doc.schema_version = root.at("schema_version").get<std::string>();
    doc.spin_twice = root.at("spin").get<int>();
    doc.n = root.at("n").get<int>();
    for (const Json& js : root.at("states")) {
        ExportState state;
        state.j_twice = js.at("j").get<int>();
        state.m_twice = js.at("m").get<int>();
        state.index = js.at("index").get<int>();
        for (const Json& ja : js.at("amplitudes")) {
            ExportAmplitude amp;
            amp.word = ja.at("word").get<std::string>();
            for (const Json& jt : ja.at("terms")) {
                ExportTerm term;
                term.num = jt.at("num").get<std::string>();
                term.den = jt.at("den").get<std::string>();
                term.radicand = jt.at("radicand").get<std::int64_t>();
                amp.terms.push_back(std::move(term));
            }
            state.amplitudes.push_back(std::move(amp));
        }
        doc.states.push_back(std::move(state));
    }
    return doc;
}

std::string to_text(const StateExportDocument& doc) {
    std::ostringstream os;
    os << "# " << doc.states.size() << " singlet state(s), n=" << doc.n << ", spin2=" << doc.spin_twice
       << "\n";
    for (const ExportState& state : doc.states) {
        os << "state " << state.index << " (j2=" << state.j_twice << ", m2=" << state.m_twice << ")\n";
        for (const ExportAmplitude& amp : state.amplitudes) {
            os << "  ";
            bool first = true;
            for (const ExportTerm& term : amp.terms) {
                if (!first) os << " + ";
                first = false;
                os << term.num;
                if (term.den != "1") os << '/' << term.den;
                if (term.radicand != 1) os << "*sqrt(" << term.radicand << ')';
            }
            os << " |" << amp.word << ">\n";
        }
    }
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_file_atomic: cannot open " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write_file_atomic: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace singlet
