//! Reference values computed offline at 50 digits (tools/oracles.py).
#![allow(dead_code)]

pub const GAMMA_MINUS_TWO_THIRDS: f64 = -4.0184078020616214505;
pub const J_THIRD_AT_5: f64 = -0.30642046380026416630;
pub const I_MINUS_THIRD_AT_2: f64 = 2.2230371861512533164;
pub const K_THIRD_AT_1: f64 = 0.43843063344153436171;
pub const N_MINUS_THIRD_AT_2: f64 = 0.55519711799449871077;
pub const AI_AT_1: f64 = 0.13529241631288141552;
pub const BI_AT_MINUS_2: f64 = -0.41230258795639848808;

pub const GAMMA_TABLE: &[(f64, f64)] = &[
    (0.1, 9.5135076986687318363),
    (0.5, 1.7724538509055160273),
    (0.66666666666666666667, 1.3541179394264004169),
    (1.3333333333333333333, 0.89297951156924921122),
    (0.16666666666666666667, 5.5663160017802352043),
    (0.83333333333333333333, 1.1287870299081259613),
    (2.5, 1.3293403881791370205),
    (7.25, 1155.3810139199896872),
    (-0.5, -3.5449077018110320546),
    (-0.33333333333333333333, -4.0623538182792012508),
    (-0.66666666666666666667, -4.0184078020616214505),
    (-1.1666666666666666667, 5.8051904395275049436),
    (-2.5, -0.94530872048294188123),
    (-3.3333333333333333333, 0.3917269753340658349),
    (25.5, 3.0867705405286967828e+24),
];

// (nu, x, J_nu(x))
pub const BESSEL_J_TABLE: &[(f64, f64, f64)] = &[
    (0.33333333333333333333, 0.3, 0.58501480583737373548),
    (0.33333333333333333333, 2.0, 0.44293981814857621225),
    (0.33333333333333333333, 7.5, 0.28967659629236255031),
    (0.33333333333333333333, 11.9, -0.092255962141642467555),
    (0.33333333333333333333, 12.1, -0.047869628728071912014),
    (0.33333333333333333333, 18.0, -0.10487107310833772557),
    (0.33333333333333333333, 40.0, 0.06920294281885805208),
    (0.33333333333333333333, 250.5, -0.027029396681964990775),
    (-0.33333333333333333333, 0.3, 1.3432948699326058195),
    (-0.33333333333333333333, 2.0, -0.075749980285132322903),
    (-0.33333333333333333333, 7.5, 0.17035401484497084988),
    (-0.33333333333333333333, 11.9, 0.13750279605545154785),
    (-0.33333333333333333333, 12.1, 0.17028866305173693568),
    (-0.33333333333333333333, 18.0, 0.082737351560996321891),
    (-0.33333333333333333333, 40.0, -0.0567457655278986256),
    (-0.33333333333333333333, 250.5, 0.023337762900891322156),
    (0.66666666666666666667, 0.3, 0.30852075392328576141),
    (0.66666666666666666667, 2.0, 0.55696967691913769947),
    (0.66666666666666666667, 7.5, 0.24017897669693306441),
    (0.66666666666666666667, 11.9, -0.18408524026698116067),
    (0.66666666666666666667, 12.1, -0.15132436905939003903),
    (0.66666666666666666667, 18.0, -0.16813403050759947983),
    (0.66666666666666666667, 40.0, 0.11243936464912019116),
    (0.66666666666666666667, 250.5, -0.044669444693948938184),
    (-0.66666666666666666667, 0.3, 1.2337378879956732097),
    (-0.66666666666666666667, 2.0, -0.38231561504110479107),
    (-0.66666666666666666667, 7.5, 0.023106534487045860222),
    (-0.66666666666666666667, 11.9, 0.21342982953162205621),
    (-0.66666666666666666667, 12.1, 0.2250327735936062457),
    (-0.66666666666666666667, 18.0, 0.15708729646784438507),
    (-0.66666666666666666667, 40.0, -0.1057715480143117704),
    (-0.66666666666666666667, 250.5, 0.04257158743972943033),
    (0.0, 0.3, 0.97762624653829608757),
    (0.0, 2.0, 0.22389077914123566805),
    (0.0, 7.5, 0.26633965788037839687),
    (0.0, 11.9, 0.025049441699589563728),
    (0.0, 12.1, 0.069666773606807388498),
    (0.0, 18.0, -0.013355805721984110885),
    (0.0, 40.0, 0.0073668905842372895535),
    (0.0, 250.5, -0.0021425350229667415262),
    (-0.5, 0.3, 1.3916685091753702268),
    (-0.5, 2.0, -0.23478571040624846917),
    (-0.5, 7.5, 0.10099089933025172416),
    (-0.5, 11.9, 0.1818142699106058912),
    (-0.5, 12.1, 0.20487976261966706036),
    (-0.5, 18.0, 0.12418126954461762248),
    (-0.5, 40.0, -0.084138655676395420896),
    (-0.5, 250.5, 0.034118165495859484795),
    (0.5, 0.3, 0.43049351732812456502),
    (0.5, 2.0, 0.51301613656182775167),
    (0.5, 7.5, 0.27328277400550601529),
    (0.5, 11.9, -0.14297213406708074617),
    (0.5, 12.1, -0.10313819465555987942),
    (0.5, 18.0, -0.14123306066859600767),
    (0.5, 40.0, 0.094000962389533577555),
    (0.5, 250.5, -0.037112626962716012296),
    (1.0, 0.3, 0.14831881627310400774),
    (1.0, 2.0, 0.5767248077568733872),
    (1.0, 7.5, 0.13524842757970550518),
    (1.0, 11.9, -0.22898324966192407078),
    (1.0, 12.1, -0.21574897337692477718),
    (1.0, 18.0, -0.18799488548806959401),
    (1.0, 40.0, 0.12603831803758499921),
    (1.0, 250.5, -0.050371040190527661183),
];

// (nu, x, I_nu(x))
pub const BESSEL_I_TABLE: &[(f64, f64, f64)] = &[
    (0.33333333333333333333, 0.3, 0.60509651841527682532),
    (0.33333333333333333333, 2.0, 2.158782581372863024),
    (0.33333333333333333333, 7.5, 266.02634039730371806),
    (0.33333333333333333333, 11.9, 17135.327216531777837),
    (0.33333333333333333333, 12.1, 20753.252365592361292),
    (0.33333333333333333333, 30.0, 780201111830.30105442),
    (-0.33333333333333333333, 0.3, 1.4371140801918964196),
    (-0.33333333333333333333, 2.0, 2.2230371861512533164),
    (-0.33333333333333333333, 7.5, 266.02647873726742391),
    (-0.33333333333333333333, 11.9, 17135.327217884338723),
    (-0.33333333333333333333, 12.1, 20753.252366690652498),
    (-0.33333333333333333333, 30.0, 780201111830.30105442),
    (0.66666666666666666667, 0.3, 0.31696439541234190095),
    (0.66666666666666666667, 2.0, 1.9089492968236219746),
    (0.66666666666666666667, 7.5, 259.72944983066550836),
    (0.66666666666666666667, 11.9, 16886.116145160784673),
    (0.66666666666666666667, 12.1, 20456.612163370550517),
    (0.66666666666666666667, 30.0, 775804343498.02625455),
    (-0.66666666666666666667, 0.3, 1.4122449044503922175),
    (-0.66666666666666666667, 2.0, 1.9777766048212929488),
    (-0.66666666666666666667, 7.5, 259.72959109313270724),
    (-0.66666666666666666667, 11.9, 16886.116146531675277),
    (-0.66666666666666666667, 12.1, 20456.612164483487124),
    (-0.66666666666666666667, 30.0, 775804343498.02625455),
    (0.0, 0.3, 1.0226268793515969911),
    (0.0, 2.0, 2.2795853023360672674),
    (0.0, 7.5, 268.16131151518936488),
    (0.0, 11.9, 17219.240276268021383),
    (0.0, 12.1, 20853.117403880704561),
    (0.0, 30.0, 781672297823.97748972),
];

// (nu, x, K_nu(x))
pub const BESSEL_K_TABLE: &[(f64, f64, f64)] = &[
    (0.33333333333333333333, 0.001, 16.715046936517459889),
    (0.33333333333333333333, 0.3, 1.5091129245821366952),
    (0.33333333333333333333, 1.9, 0.1319801966002782968),
    (0.33333333333333333333, 2.1, 0.10303290398593387772),
    (0.33333333333333333333, 5.0, 0.0037288750960535883824),
    (0.33333333333333333333, 11.9, 2.4532740744378005252e-6),
    (0.33333333333333333333, 12.1, 1.9920798914733966207e-6),
    (0.33333333333333333333, 30.0, 2.1363664736611191758e-14),
    (0.66666666666666666667, 0.001, 107.46383549069976944),
    (0.66666666666666666667, 0.3, 1.9866190909513461625),
    (0.66666666666666666667, 1.9, 0.14180268708659431785),
    (0.66666666666666666667, 2.1, 0.11005819508984276864),
    (0.66666666666666666667, 5.0, 0.0038444246344968212873),
    (0.66666666666666666667, 11.9, 2.4865205050791123609e-6),
    (0.66666666666666666667, 12.1, 2.0186437104235617072e-6),
    (0.66666666666666666667, 30.0, 2.1480755645577720371e-14),
    (0.0, 0.001, 7.0236888005623813436),
    (0.0, 0.3, 1.3724600605442973766),
    (0.0, 1.9, 0.12884597927604747986),
    (0.0, 2.1, 0.10078374088996694581),
    (0.0, 5.0, 0.0036910983340425942747),
    (0.0, 11.9, 2.4422886371722719055e-6),
    (0.0, 12.1, 1.9833013543985353367e-6),
    (0.0, 30.0, 2.1324774964630563712e-14),
    (1.0, 0.001, 999.99623815608557428),
    (1.0, 0.3, 3.0559920334573249789),
    (1.0, 1.9, 0.15966015303266761038),
    (1.0, 2.1, 0.12274641153350791061),
    (1.0, 5.0, 0.0040446134454521642084),
    (1.0, 11.9, 2.5429107953476979883e-6),
    (1.0, 12.1, 2.0636871233371845491e-6),
    (1.0, 30.0, 2.1677320018915494249e-14),
];

// (z, Ai, Ai', Bi, Bi')
pub const AIRY_TABLE: &[(f64, f64, f64, f64, f64)] = &[
    (-7.5, 0.32177571638064787527, 0.31880950669855459621, -0.11246348507649080638, 0.87780228154576092237),
    (-2.0, 0.22740742820168557599, 0.61825902074169104141, -0.41230258795639848808, 0.27879516692116952269),
    (-1.0, 0.5355608832923521188, -0.010160567116645209395, 0.10399738949694461189, 0.59237562642279235082),
    (-0.25, 0.41872461427545292423, -0.24638918992017597303, 0.50139987346923338897, 0.46515148833715370327),
    (0.25, 0.29116395434854520627, -0.2490621120048971418, 0.72874690393621500787, 0.46986119376795935655),
    (1.0, 0.13529241631288141552, -0.15914744129679321279, 1.2074235949528712594, 0.93243593339277563296),
    (2.0, 0.034924130423274379135, -0.053090384433653631704, 3.2980949999782147103, 4.1006820499328898894),
    (3.5, 0.0025840987869896349633, -0.005004413967952582832, 33.055506754611479414, 59.164319581360987035),
    (6.0, 9.9476943602528895702e-6, -0.000024765200397034954754, 6536.4461048098634538, 15725.602621930476839),
];

// (a, b, c, z, 2F1)
pub const HYP2F1_TABLE: &[(f64, f64, f64, f64, f64)] = &[
    (0.5, 0.5, 1.5, 0.3, 1.0582725367454619441),
    (1.0, 1.0, 2.0, -0.7, 0.75804035866024343396),
    (1.3333333333333332593, 0.33333333333333331483, 0.83333333333333337034, 0.8, 2.6466251544222397703),
    (-0.5, 0.33333333333333331483, 1.3333333333333332593, 0.95, 0.85323797575343298868),
    (2.5, 1.0, 0.5, -2.5, -0.14188532555879494655),
    (0.16666666666666665741, 0.83333333333333337034, 1.1666666666666667407, 0.999, 1.6116245819705748647),
    (0.25, 0.75, 1.5, -10.0, 0.68067977645224628036),
    (-3.0, 2.5, 0.75, 0.6, -0.15636363636363641289),
    (0.5, 0.5, 2.0, 1.0, 1.2732395447351626862),
    (0.2999999999999999889, 0.2000000000000000111, 0.69999999999999995559, 0.55, 1.0659722948711403354),
];
// fundamental solutions and spectral Green's functions at sample points
pub const F_MINUS_N2_AT_0_0_M1: f64 = 0.23873241463784300365;
pub const PLUS_FORMULA_N2_AT_HALF_0_1: f64 = -0.059098544533569493845;
pub const F_PLUS_N1_AT_1_HALF: f64 = -0.33463747683898951593;
pub const F_MINUS_N3_AT_01_0_0_M1: f64 = -0.082064937167682854899;
pub const AIRY_TWO_SIDED_B07_XI3_Y12: f64 = -0.043000486643398596639;
pub const PLUS_KN_XI2_YM05: f64 = 0.055171801495486295071;
pub const ORIGIN_AI_BI_XI15_Y08: f64 = -0.18835866575568534845;
