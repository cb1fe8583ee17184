#include "mostar/error.hpp"

namespace mostar {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::BadParams: return "BadParams";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::Unknown: return "Unknown";
    case Errc::OddTarget: return "OddTarget";
    case Errc::CertificationFailure: return "CertificationFailure";
    case Errc::MalformedRecord: return "MalformedRecord";
    case Errc::EmptyStream: return "EmptyStream";
    case Errc::MixedOrder: return "MixedOrder";
    case Errc::UnknownSuite: return "UnknownSuite";
  }
  return "Error";
}

}  // namespace mostar
