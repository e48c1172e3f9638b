//! Exact bracket coefficients of the one-instanton decay-width series.
//!
//! The four shipped tables cover the two lowest levels of the cubic and
//! quartic oscillators through order g^8 relative to the leading width:
//!
//!   Im E_0(g<0)   = -exp(1/(3g)) sqrt(-2/(pi g))    { QUARTIC_N0 }
//!   Im E_1(g<0)   = -exp(1/(3g)) sqrt(-32/(pi g^3)) { QUARTIC_N1 }
//!   Im eps_0(g>0) = -exp(-2/(15g)) / sqrt(pi g)          { CUBIC_N0 }
//!   Im eps_1(g>0) = -8 exp(-2/(15g)) / (sqrt(pi) g^{3/2}) { CUBIC_N1 }
//!
//! Transcribed digit-for-digit; the serialization round-trip test guards the
//! transcription.

pub const QUARTIC_N0: [&str; 9] = [
    "1",
    "95/24",
    "-13259/1152",
    "8956043/82944",
    "-11481557783/7962624",
    "4580883830443/191102976",
    "-12914334973382407/27518828544",
    "6938216714164463905/660451885056",
    "-33483882026182043052421/126806761930752",
];

pub const QUARTIC_N1: [&str; 9] = [
    "1",
    "371/24",
    "-3371/1152",
    "33467903/82944",
    "-73699079735/7962624",
    "44874270156367/191102976",
    "-181465701024056263/27518828544",
    "133606590325852428349/660451885056",
    "-850916613482026035123397/126806761930752",
];

pub const CUBIC_N0: [&str; 9] = [
    "1",
    "-169/16",
    "-44507/512",
    "-86071851/40960",
    "-189244716209/2621440",
    "-128830328039451/41943040",
    "-1027625748709963623/6710886400",
    "-933142404651555165943/107374182400",
    "-7583898146256325425743381/13743895347200",
];

pub const CUBIC_N1: [&str; 9] = [
    "1",
    "-853/16",
    "33349/512",
    "-395368511/40960",
    "-1788829864593/2621440",
    "-2121533029723423/41943040",
    "-27231734458812207783/6710886400",
    "-37583589061337851179291/107374182400",
    "-442771791224240926548268373/13743895347200",
];
