#pragma once

// Reference values computed with mpmath (60 digits, derivative tables at 800).

#include <complex>
#include <cstddef>

namespace ref {

struct WPoint { double x, y, re, im; };

inline constexpr WPoint faddeeva[] = {
    {0.0, 0.0, 1.0, 0.0},
    {1.5, 0.0, 0.10539922456186433678, 0.48322733014076905793},
    {0.3, 0.2, 0.75289479013687920895, 0.22965315234906994469},
    {-1.2, 0.7, 0.28074027400360063648, -0.2918509101306355589},
    {2.5, -0.4, -0.050658906009934929642, 0.24221190375114846087},
    {0.1, -1.3, 10.01379020212836783, 2.7785650495405242552},
    {-3.0, -2.0, -0.081339079928627360454, -0.12108616246299844894},
    {4.5, 1.0, 0.028515290472053639784, 0.12184939596352118887},
    {6.0, 6.0, 0.047335271133396014099, 0.046682744869731973312},
    {-12.0, 0.5, 0.0019762436764948045602, -0.047097556962267810332},
    {0.0, -3.5, 417962.42244577031413, 0.0},
    {25.0, -0.5, -0.00045225734443087918752, 0.022576613940763919367},
    {0.001, 0.001, 0.99887162233541124713, 0.0011263806715998664529},
    {-0.7, 4.2, 0.12767457522170704106, -0.020236623428901644324},
};

struct DerivPoint { double x, y; std::size_t k; double re, im; };
// scaled derivatives w^(k)(z)/sqrt(2^k k!)
inline constexpr DerivPoint derivatives[] = {
    {0.5, 0.0, 0, 0.77880078307140486825, 0.47892517290104347254},
    {0.5, 0.0, 1, -0.55069531490318374762, 0.45923332336359776909},
    {0.5, 0.0, 10, 0.28862260379532700343, -0.33090814618098500021},
    {0.5, 0.0, 100, 0.17277424085841723233, 0.17936500021519435106},
    {0.5, 0.0, 1000, -0.13044311321956516409, -0.051294107396349897755},
    {0.5, 0.0, 1999, 0.023716813163644730177, -0.11547491810261655822},
    {2.83, 0.0, 5, -0.013531421163269598422, -0.0040995933357591201532},
    {2.83, 0.0, 50, 0.006096524511120978042, -0.0013178496588128335798},
    {2.83, 0.0, 500, 0.00040523775877808223075, 0.0034266096819816778531},
    {2.83, 0.0, 1999, 0.00040746260918624446412, 0.0024026453002753967528},
    {5.66, 0.0, 1, -9.7824384615115107566e-14, -0.01308750731558427491},
    {5.66, 0.0, 30, 3.2271279036046740024e-8, -3.8962886012342881771e-8},
    {5.66, 0.0, 300, 1.813799513336087924e-8, -1.5784366318690079385e-8},
    {5.66, 0.0, 1999, -9.4749759144596173518e-9, -1.1365436238091519044e-8},
    {-5.66, 0.0, 7, 2.5276313694812486467e-10, -6.6322939024856694664e-6},
    {-5.66, 0.0, 700, -1.6391940365122346123e-8, 1.0198889927594987311e-8},
    {-5.66, 0.0, 1999, 9.4749759144596173518e-9, -1.1365436238091519044e-8},
    {0.0, 0.7, 3, 0.0, -0.12473250679061275508},
    {0.0, 0.7, 399, 0.0, -6.4987298156543296321e-10},
    {2.0, 0.7, 50, -0.000057378613467096516015, 0.000013187148955301502374},
    {2.0, 0.7, 399, -9.1798642971410050374e-11, -1.1663418240618920505e-11},
    {-1.0, -0.5, 2, 1.2651946402213502111, 0.61556674838596027465},
    {-1.0, -0.5, 120, -408.56597321515356703, 132.02991864005569194},
    {-1.0, -0.5, 399, 88184.140139705787093, 165137.60755615785274},
    {0.3, 0.1, 9, -0.30315695119385747867, 0.091167424680794834893},
    {0.3, 0.1, 399, 0.0094087920770163119091, 0.0063805753606197285001},
    {3.5, 0.2, 100, -0.000011128840310523219472, -0.000039431246985422118495},
    {3.5, 0.2, 399, -9.163019655498970567e-7, 1.3588605540710045968e-6},
};

struct IPoint { double lambda; std::size_t n; double re_plus, im_plus, re_minus, im_minus; };
inline constexpr IPoint ipm[] = {
    {0.0, 1, 0.5, 0.0, 0.5, 0.0},
    {0.0, 2, 0.0, -0.39894228040143267794, 0.0, 0.39894228040143267794},
    {0.0, 5, 0.30618621784789726227, 0.0, 0.30618621784789726227, 0.0},
    {0.0, 100, 0.0, 0.14141090254545798266, 0.0, -0.14141090254545798266},
    {1.3, 1, 0.5, 0.7106016428177401483, 0.5, -0.7106016428177401483},
    {1.3, 7, 0.4292376400559391986, 0.061268212381949385404, 0.4292376400559391986, -0.061268212381949385404},
    {1.3, 50, 0.073930716966834475815, 0.24661278066065942822, 0.073930716966834475815, -0.24661278066065942822},
    {1.3, 400, -0.1141829918348293129, 0.10103105754878980276, -0.1141829918348293129, -0.10103105754878980276},
    {-2.0, 3, 1.0606601717798212866, 0.16682771196776559596, 1.0606601717798212866, -0.16682771196776559596},
    {-2.0, 250, -0.046942099019297677348, -0.30215079147915718546, -0.046942099019297677348, 0.30215079147915718546},
    {3.0, 10, 1.344632185501192845, 2.2015931938022901412, 1.344632185501192845, -2.2015931938022901412},
    {3.0, 500, 0.76682818753095937877, -0.46604766280183320205, 0.76682818753095937877, 0.46604766280183320205},
};

}  // namespace ref
