#include "eot/transcript.hpp"

#include <stdexcept>

namespace eot {

const char* party_name(Party p) {
    switch (p) {
        case Party::alice: return "A";
        case Party::bob: return "B";
        case Party::cathy: return "C";
        case Party::eve: return "E";
    }
    return "?";
}

std::string payload_to_string(const Transcript::Payload& p) {
    struct Visitor {
        std::string operator()(int64_t v) const { return std::to_string(v); }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(const BitVec& v) const { return v.to_string(); }
        std::string operator()(const TritString& t) const { return t.to_ascii(); }
        std::string operator()(const BitMatrix& m) const { return m.to_string(); }
        std::string operator()(const std::vector<int64_t>& xs) const {
            std::string s;
            for (size_t i = 0; i < xs.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(xs[i]);
            }
            return s;
        }
    };
    return std::visit(Visitor{}, p);
}

bool Transcript::has_label(const std::string& label) const {
    for (const auto& r : records_)
        if (r.label == label) return true;
    return false;
}

const Transcript::Record& Transcript::find(const std::string& label) const {
    for (const auto& r : records_)
        if (r.label == label) return r;
    throw std::out_of_range("transcript: no record labeled " + label);
}

std::string Transcript::serialize() const {
    std::string out;
    for (const auto& r : records_) {
        std::string payload = payload_to_string(r.payload);
        out += std::to_string(payload.size());
        out += ' ';
        out += party_name(r.sender);
        out += ' ';
        out += r.label;
        out += ' ';
        out += payload;
        out += '\n';
    }
    return out;
}

} // namespace eot
