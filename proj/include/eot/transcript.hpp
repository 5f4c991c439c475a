#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "eot/channel.hpp"
#include "eot/gf2.hpp"

namespace eot {

enum class Party { alice, bob, cathy, eve };

const char* party_name(Party p);

// Public-channel transcript: an append-only list of labeled records, each a
// message every party (including the eavesdropper) sees. Payloads are kept
// structured; serialization renders the documented ASCII format
//   <payload-length> <party> <label> <payload>\n
// with index selections as comma-separated decimals, bit strings over {0,1},
// channel strings over {0,1,e} and matrices as '/'-joined rows.
class Transcript {
public:
    using Payload = std::variant<int64_t, std::string, BitVec, TritString, BitMatrix,
                                 std::vector<int64_t>>;

    struct Record {
        Party sender;
        std::string label;
        Payload payload;
    };

    void add(Party sender, std::string label, Payload payload) {
        records_.push_back({sender, std::move(label), std::move(payload)});
    }

    const std::vector<Record>& records() const { return records_; }
    bool has_label(const std::string& label) const;
    const Record& find(const std::string& label) const; // throws if absent

    std::string serialize() const;

private:
    std::vector<Record> records_;
};

std::string payload_to_string(const Transcript::Payload& p);

} // namespace eot
