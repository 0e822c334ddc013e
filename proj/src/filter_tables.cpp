// Copyright 2026 The wavseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scaling (low-pass) filter coefficients, standard published ordering
// (db2 starts 0.48296..., 0.83651...). Values carry 17 significant digits.

#include "filter_tables.hpp"

namespace wavseg::detail {

const std::array<double, 4> kDb2Lowpass = {
    0.48296291314453416, 0.8365163037378079, 0.2241438680420134,
    -0.12940952255126037,
};

const std::array<double, 8> kDb4Lowpass = {
    0.2303778133088965, 0.7148465705529157, 0.6308807679298589,
    -0.027983769416859854, -0.18703481171909309, 0.030841381835560764,
    0.0328830116668852, -0.010597401785069032,
};

const std::array<double, 12> kDb6Lowpass = {
    0.11154074335010947, 0.49462389039845306, 0.7511339080210954,
    0.31525035170919763, -0.22626469396543983, -0.12976686756726194,
    0.09750160558732304, 0.027522865530305727, -0.03158203931748603,
    0.0005538422011614961, 0.004777257510945511, -0.0010773010853084796,
};

const std::array<double, 16> kDb8Lowpass = {
    0.05441584224310401, 0.31287159091429995, 0.6756307362972898,
    0.5853546836542067, -0.015829105256349306, -0.2840155429615469,
    0.0004724845739132828, 0.12874742662047847, -0.017369301001807547,
    -0.044088253930794755, 0.013981027917398282, 0.008746094047405777,
    -0.004870352993451574, -0.00039174037337694705, 0.0006754494064505693,
    -0.00011747678412476953,
};

const std::array<double, 6> kCoif1Lowpass = {
    -0.07273261951252645, 0.3378976624574818, 0.8525720202116004,
    0.3848648468648578, -0.07273261951252645, -0.015655728135791993,
};

const std::array<double, 12> kCoif2Lowpass = {
    0.01638733646320364, -0.04146493678687178, -0.0673725547237256,
    0.3861100668227629, 0.8127236354494135, 0.4170051844232391,
    -0.07648859907828076, -0.05943441864643109, 0.02368017194684777,
    0.005611434819368834, -0.0018232088709110323, -0.000720549445520347,
};

const std::array<double, 18> kCoif3Lowpass = {
    -0.003793512864380802, 0.007782596425672746, 0.023452696142077168,
    -0.06577191128146936, -0.06112339000297255, 0.40517690240911824,
    0.7937772226260872, 0.42848347637737, -0.07179982161915484,
    -0.08230192710629983, 0.03455502757329774, 0.015880544863669452,
    -0.009007976136730624, -0.0025745176881367972, 0.0011175187708306303,
    0.0004662169598204029, -7.0983302506379e-05, -3.459977319727278e-05,
};

const std::array<double, 24> kCoif4Lowpass = {
    0.000892313902537003, -0.001629492425226786, -0.007346167936268051,
    0.01606894713157503, 0.02668230466960483, -0.08126671024919373,
    -0.05607731960356926, 0.41530842700068227, 0.7822389344242826,
    0.43438603311435653, -0.06662747236681717, -0.09622042453595264,
    0.03933442260558915, 0.02508225333794961, -0.015211728187697211,
    -0.0056582838001308835, 0.0037514346971460866, 0.0012665610789256603,
    -0.0005890202246332165, -0.0002599743371222568, 6.233885431278719e-05,
    3.1229861599195265e-05, -3.259647940030751e-06, -1.7849909144933469e-06,
};

const std::array<double, 30> kCoif5Lowpass = {
    -0.000212081862067494, 0.0003585777411617577, 0.0021782943778456947,
    -0.00415931262757864, -0.010131584846900276, 0.023408322118927783,
    0.028169744270532353, -0.09192158806008609, -0.052046670253554764,
    0.42157126673075435, 0.7742936228603274, 0.4379823066591634,
    -0.06203775157498196, -0.10556315130733723, 0.041287530472117834,
    0.032674799467057355, -0.019758391600965465, -0.009159507338676163,
    0.006761520220620417, 0.0024315754425382886, -0.0016616273039298788,
    -0.0006375589261258812, 0.0003018579416682448, 0.00014035632812373243,
    -4.12198619242655e-05, -2.1270221672515614e-05, 3.7007277113394796e-06,
    2.0612203985788783e-06, -1.6237995172048338e-07, -9.604010112767894e-08,
};

}  // namespace wavseg::detail
