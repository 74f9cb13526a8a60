// Generated by tests/oracles/make_fixtures.py (mpmath, 50 digits). Do not edit.
#pragma once

namespace extremal::fixtures {

struct Sample {
    double arg;
    double value;
};

inline constexpr Sample kDefectMinorant[] = {
    {1.0e-12, 8.3333333333333333333e-14},
    {1.0e-9, 8.3333333333333333331e-11},
    {1.0e-6, 8.3333333333330902778e-8},
    {1.0e-4, 8.3333333309027777784e-6},
    {3.162277660168379332e-4, 2.6352313757875579285e-5},
    {1.0e-3, 8.3333330902777841849e-5},
    {3.162277660168379332e-3, 2.6352306148646985397e-4},
    {0.01, 8.3333090278418483809e-4},
    {0.1, 8.3309034183214392308e-3},
    {0.3162277660168379332, 0.026275655011476904291},
    {1.0, 0.080965248665056280508},
    {1.9952623149688795503, 0.14880380757915827176},
    {3.162277660168379332, 0.20278666189676744208},
    {10.0, 0.18652349416941091334},
    {31.62277660168379332, 0.06324528141472452665},
    {100.0, 0.02},
    {316.2277660168379332, 6.324555320336758664e-3},
    {1.0e+3, 2.0e-3},
    {2.0, 0.14908187176067845487},
    {9.99e-4, 8.3249997576728885626e-5},
    {1.001e-3, 8.3416664228812214739e-5},
};
inline constexpr Sample kDefectMajorant[] = {
    {1.0e-12, 1.6666666666666666667e-13},
    {1.0e-9, 1.6666666666666666666e-10},
    {1.0e-6, 1.6666666666666388889e-7},
    {1.0e-4, 1.666666666388888889e-5},
    {3.162277660168379332e-4, 5.270462758163194296e-5},
    {1.0e-3, 1.6666666388888895503e-4},
    {3.162277660168379332e-3, 5.2704618885370468741e-4},
    {0.01, 1.666663888895502629e-3},
    {0.1, 0.016663889550099248092},
    {0.3162277660168379332, 0.052616995247158754021},
    {1.0, 0.16395341373865284877},
    {1.9952623149688795503, 0.31238135458412449547},
    {3.162277660168379332, 0.45594482535542728914},
    {10.0, 0.80009080398201937554},
    {31.62277660168379332, 0.93675444679666934789},
    {100.0, 0.98},
    {316.2277660168379332, 0.99367544467966324134},
    {1.0e+3, 0.998},
    {2.0, 0.31303528549933130364},
    {9.99e-4, 1.6649999723054729081e-4},
    {1.001e-3, 1.6683333054721395258e-4},
};
inline constexpr Sample kZeta[] = {
    {-0.95, -0.091925315118247932798},
    {-0.9, -0.10119350398535188643},
    {-0.85, -0.11119352796398325745},
    {-0.8, -0.12198707766977114226},
    {-0.75, -0.13364277443658456241},
    {-0.7, -0.14623719172590804947},
    {-0.65, -0.15985606232073620546},
    {-0.6, -0.17459571193801337872},
    {-0.55, -0.19056477038001522004},
    {-0.5, -0.20788622497735456602},
    {-0.45, -0.2266998989392925055},
    {-0.4, -0.24716546083171483635},
    {-0.35, -0.26946610287604230133},
    {-0.3, -0.29381306812972126291},
    {-0.25, -0.32045126422857728279},
    {-0.2, -0.34966628059831413714},
    {-0.15, -0.38179323627131075162},
    {-0.1, -0.41722804076736685681},
    {-0.05, -0.45644187238633065546},
    {0.05, -0.54858654857304602708},
    {0.1, -0.60303751985624171525},
    {0.15, -0.66438546743361988706},
    {0.2, -0.73392092489634059224},
    {0.25, -0.81327840526189165652},
    {0.3, -0.90455925725398399001},
    {0.35, -1.010511224437591426},
    {0.4, -1.1347977838669815652},
    {0.45, -1.2824143966562057001},
    {0.5, -1.4603545088095868129},
    {0.55, -1.6787195525058747716},
    {0.6, -1.9526614482240007304},
    {0.65, -2.3059901085423761396},
    {0.7, -2.7783884455536960528},
    {0.75, -3.4412853869452228944},
    {0.8, -4.4375384158955504719},
    {0.85, -6.100481190342902063},
    {0.9, -9.4301140194022523723},
    {0.95, -19.426437196930799171},
    {1.05, 20.58084430203700259},
    {1.1, 10.584448464950809826},
    {1.15, 7.2546945850681185069},
    {1.2, 5.5915824411777507765},
    {1.25, 4.5951118258429433807},
    {1.3, 3.931949211809544227},
    {1.35, 3.4592372755548706454},
    {1.4, 3.1055472779775803998},
    {1.45, 2.831196524451115536},
    {1.5, 2.6123753486854883433},
    {1.55, 2.4339321052462062471},
    {1.6, 2.2857656656801298766},
    {1.65, 2.1608829163060491737},
    {1.7, 2.0542887568377512393},
    {1.75, 1.9623200994513419902},
    {1.8, 1.8822296181028220467},
    {1.85, 1.8119164097580233901},
    {1.9, 1.749746435125060814},
    {1.95, 1.694429662231050978},
    {0.999, -999.42285715578879001},
    {1.001, 1.0005772884759014927e+3},
    {0.25, -0.81327840526189165652},
    {-0.5, -0.20788622497735456602},
    {0.0, -0.5},
};
inline constexpr Sample kGamma[] = {
    {-0.95, -20.494826643426855646},
    {-0.9, -10.570564109631924263},
    {-0.85, -7.3179680871175030793},
    {-0.8, -5.7385546399985038165},
    {-0.75, -4.8341465442958777492},
    {-0.7, -4.2736699824108437547},
    {-0.65, -3.9171491957112123501},
    {-0.6, -3.6969325729294803718},
    {-0.55, -3.5784298192770588989},
    {-0.5, -3.5449077018110320546},
    {-0.45, -3.5913872638523891868},
    {-0.4, -3.722980622032042756},
    {-0.35, -3.956557434361457151},
    {-0.3, -4.3268511088251926189},
    {-0.25, -4.9016668098607105805},
    {-0.2, -5.8211485686265168682},
    {-0.15, -7.4165582463231016413},
    {-0.1, -10.686287021193193549},
    {-0.05, -20.629066342580643923},
    {0.05, 19.470085311255512864},
    {0.1, 9.5135076986687318363},
    {0.15, 6.2202728740498776174},
    {0.2, 4.5908437119988030532},
    {0.25, 3.6256099082219083119},
    {0.3, 2.9915689876875906283},
    {0.35, 2.5461469772122880276},
    {0.4, 2.2181595437576882231},
    {0.45, 1.9681364006023823944},
    {0.5, 1.7724538509055160273},
    {0.55, 1.6161242687335751341},
    {0.6, 1.4891922488128171024},
    {0.65, 1.3847951020265100029},
    {0.7, 1.2980553326475577857},
    {0.75, 1.2254167024651776451},
    {0.8, 1.1642297137253033736},
    {0.85, 1.1124837369484652462},
    {0.9, 1.0686287021193193549},
    {0.95, 1.0314533171290321962},
    {0.25, 3.6256099082219083119},
    {1.0e-6, 9.9999942278532415355e+5},
    {-1.0e-6, -1.0000005772166539584e+6},
    {0.999, 1.000578205629358648},
};
inline constexpr Sample kLowerConstantPower[] = {
    {0.25, 5.7502524472168167287},
    {0.3, 4.5045554903123794803},
    {0.5, 2.1443098598803826791},
    {0.7, 1.2509773366199500528},
    {0.75, 1.1158036434525682278},
    {1.25, 0.49982242419514012894},
    {1.3, 0.47736157465357928651},
    {1.5, 0.43168798117621373308},
    {1.7, 0.48051128894306149662},
    {1.75, 0.52381173489862206124},
};
inline constexpr Sample kUpperConstantPower[] = {
    {1.25, 3.1414906520942441},
    {1.3, 2.5425707992488326187},
    {1.5, 1.4738749600452902877},
    {1.7, 1.2499389931821452793},
    {1.75, 1.2920975124254574657},
};
inline constexpr double kGammaQuarter = 3.6256099082219083119;
inline constexpr double kZetaHalf = -1.4603545088095868129;
inline constexpr double kZetaThreeHalves = 2.6123753486854883433;
inline constexpr double kOneMinusCsch1 = 0.14908187176067845487;
inline constexpr double kCoth1MinusOne = 0.31303528549933130364;
inline constexpr double kPowerHalfFAt2 = -0.51913971359001577609;

}  // namespace extremal::fixtures
