#include "enriques/weierstrass/kodaira.hpp"

#include <cctype>

#include "enriques/errors.hpp"

namespace enriques::weierstrass {

std::optional<KodairaType> KodairaType::try_parse(std::string_view s) {
    std::string t;
    for (char c : s) {
        if (c != '_' && c != '{' && c != '}' && c != ' ') t.push_back(c);
    }
    const bool star = !t.empty() && t.back() == '*';
    if (star) t.pop_back();
    if (t == "II") return KodairaType{star ? KodairaFamily::IIStar : KodairaFamily::II, 0};
    if (t == "III") return KodairaType{star ? KodairaFamily::IIIStar : KodairaFamily::III, 0};
    if (t == "IV") return KodairaType{star ? KodairaFamily::IVStar : KodairaFamily::IV, 0};
    if (t.size() >= 2 && t[0] == 'I' && t.size() <= 4) {
        int n = 0;
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
            n = n * 10 + (t[i] - '0');
        }
        return KodairaType{star ? KodairaFamily::IStar : KodairaFamily::I, n};
    }
    return std::nullopt;
}

KodairaType KodairaType::parse(std::string_view text) {
    if (auto k = try_parse(text)) return *k;
    throw InvalidParameter("unknown Kodaira fiber type '" + std::string(text) + "'");
}

std::string KodairaType::to_string() const {
    switch (family) {
        case KodairaFamily::I: return "I" + std::to_string(n);
        case KodairaFamily::IStar: return "I" + std::to_string(n) + "*";
        case KodairaFamily::II: return "II";
        case KodairaFamily::III: return "III";
        case KodairaFamily::IV: return "IV";
        case KodairaFamily::IIStar: return "II*";
        case KodairaFamily::IIIStar: return "III*";
        case KodairaFamily::IVStar: return "IV*";
    }
    return "?";
}

bool KodairaType::is_reducible() const noexcept { return components() > 1; }

int KodairaType::components() const noexcept {
    switch (family) {
        case KodairaFamily::I: return n == 0 ? 1 : n;
        case KodairaFamily::IStar: return n + 5;
        case KodairaFamily::II: return 1;
        case KodairaFamily::III: return 2;
        case KodairaFamily::IV: return 3;
        case KodairaFamily::IIStar: return 9;
        case KodairaFamily::IIIStar: return 8;
        case KodairaFamily::IVStar: return 7;
    }
    return 1;
}

int KodairaType::discriminant() const noexcept {
    switch (family) {
        case KodairaFamily::I: return n == 0 ? 1 : n;
        case KodairaFamily::IStar: return 4;
        case KodairaFamily::II: return 1;
        case KodairaFamily::III: return 2;
        case KodairaFamily::IV: return 3;
        case KodairaFamily::IIStar: return 1;
        case KodairaFamily::IIIStar: return 2;
        case KodairaFamily::IVStar: return 3;
    }
    return 1;
}

int KodairaType::euler_number() const noexcept {
    switch (family) {
        case KodairaFamily::I: return n;
        case KodairaFamily::IStar: return n + 6;
        case KodairaFamily::II: return 2;
        case KodairaFamily::III: return 3;
        case KodairaFamily::IV: return 4;
        case KodairaFamily::IIStar: return 10;
        case KodairaFamily::IIIStar: return 9;
        case KodairaFamily::IVStar: return 8;
    }
    return 0;
}

}  // namespace enriques::weierstrass
