// Generated by tests/oracle/generate.py; do not edit by hand.

/// (x, y, Gamma[l][m][n]) for the Schwarzschild field with m = 3e5 cm.
pub type ChristoffelSample = (f64, f64, [[[f64; 3]; 3]; 3]);

pub const CHRISTOFFEL_SAMPLES: [ChristoffelSample; 20] = [
    (23641184.3134692, -14989631.348375158, [[[0.0, 1.6341908654204268e-10, -1.0361544625147306e-10], [1.6341908654204268e-10, 0.0, 0.0], [-1.0361544625147306e-10, 0.0, 0.0]], [[1.5993511288252948e-10, 0.0, 0.0], [0.0, -2.3846400889991797e-11, 2.2012973567783633e-10], [0.0, 2.2012973567783633e-10, 1.8376274422386883e-10]], [[-1.0140644182550616e-10, 0.0, 0.0], [0.0, 1.5119748384301177e-11, -1.3957268565205087e-10], [0.0, -1.3957268565205087e-10, -1.165142894263633e-10]]]),
    (-19496718.785463467, -291384679.66999847, [[[0.0, -1.175408967461227e-13, -1.7566861851661653e-12], [-1.175408967461227e-13, 0.0, 0.0], [-1.7566861851661653e-12, 0.0, 0.0]], [[-1.172995283491964e-13, 0.0, 0.0], [0.0, -2.332697127965612e-13, 2.3472942396823478e-14], [0.0, 2.3472942396823478e-14, 1.159703084863125e-13]], [[-1.75307885750274e-12, 0.0, 0.0], [0.0, -3.4862902464704525e-12, 3.508106095426839e-13], [0.0, 3.508106095426839e-13, 1.7332132427693417e-12]]]),
    (6288191.413924768, 649339.3162310945, [[[0.0, 3.9196294784281585e-09, 4.0475382472703986e-10], [3.9196294784281585e-09, 0.0, 0.0], [4.0475382472703986e-10, 0.0, 0.0]], [[3.556435976638397e-09, 0.0, 0.0], [0.0, -3.799488914865235e-09, -1.1634392703114804e-09], [0.0, -1.1634392703114804e-09, 7.347097558306313e-09]], [[3.672492698260077e-10, 0.0, 0.0], [0.0, -3.923477152019998e-10, -1.201405635629238e-10], [0.0, -1.201405635629238e-10, 7.586854455844405e-10]]]),
    (-11110766.467507822, 8441056.414842824, [[[0.0, -6.269365841716181e-10, 4.762954104919188e-10], [-6.269365841716181e-10, 0.0, 0.0], [4.762954104919188e-10, 0.0, 0.0]], [[-6.002681617462389e-10, 0.0, 0.0], [0.0, -5.148763546872905e-11, -8.929940400671388e-10], [0.0, -8.929940400671388e-10, -5.484907259237915e-10]], [[4.5603491281646197e-10, 0.0, 0.0], [0.0, 3.911611650999704e-11, 6.784242196403471e-10], [0.0, 6.784242196403471e-10, 4.1669862957521997e-10]]]),
    (-249800397.62698725, 143929572.95051214, [[[0.0, -1.5653443807288368e-12, 9.019174924421542e-13], [-1.5653443807288368e-12, 0.0, 0.0], [9.019174924421542e-13, 0.0, 0.0]], [[-1.5620883168619852e-12, 0.0, 0.0], [0.0, 3.9572269342467795e-13, -2.0299647707715027e-12], [0.0, -2.0299647707715027e-12, -1.9578093152933886e-12]], [[9.000414190399198e-13, 0.0, 0.0], [0.0, -2.2800683590780263e-13, 1.169621687304159e-12], [0.0, 1.169621687304159e-12, 1.1280472783293483e-12]]]),
    (3707884.136751568, 3547223.3519951818, [[[0.0, 4.371941965710288e-09, 4.182507883841766e-09], [4.371941965710288e-09, 0.0, 0.0], [4.182507883841766e-09, 0.0, 0.0]], [[3.875685867269879e-09, 0.0, 0.0], [0.0, 1.6513848462733764e-09, -6.296135236046721e-09], [0.0, -6.296135236046721e-09, 2.209357729288995e-09]], [[3.7077543165687477e-09, 0.0, 0.0], [0.0, 1.5798311580911123e-09, -6.0233268119836645e-09], [0.0, -6.0233268119836645e-09, 2.1136273522049552e-09]]]),
    (-9724479.959545678, -25367336.39062527, [[[0.0, -7.355905906910919e-11, -1.918865999772337e-10], [-7.355905906910919e-11, 0.0, 0.0], [-1.918865999772337e-10, 0.0, 0.0]], [[-7.194345507391224e-11, 0.0, 0.0], [0.0, -1.1742723898413565e-10, 7.321393146554235e-11], [0.0, 7.321393146554235e-11, 4.549275370961818e-11]], [[-1.8767212576465958e-10, 0.0, 0.0], [0.0, -3.0632139560418026e-10, 1.9098629805324484e-10], [0.0, 1.9098629805324484e-10, 1.1867266851169135e-10]]]),
    (-199354572.8163486, 113973711.02161853, [[[0.0, -2.4726959574769476e-12, 1.4136737899733312e-12], [-2.4726959574769476e-12, 0.0, 0.0], [1.4136737899733312e-12, 0.0, 0.0]], [[-2.4662394147505673e-12, 0.0, 0.0], [0.0, 6.469236453893822e-13, -3.193508889669257e-12], [0.0, -3.193508889669257e-12, -3.1131588399023225e-12]], [[1.409982496994699e-12, 0.0, 0.0], [0.0, -3.698550154682725e-13, 1.8257723120875656e-12], [0.0, 1.8257723120875656e-12, 1.7798350996959257e-12]]]),
    (47210660.92327854, -34869035.603984654, [[[0.0, 3.520712288497575e-11, -2.600341527489103e-11], [3.520712288497575e-11, 0.0, 0.0], [-2.600341527489103e-11, 0.0, 0.0]], [[3.48481224585723e-11, 0.0, 0.0], [0.0, 1.94625407270486e-12, 5.0303527221824486e-11], [0.0, 5.0303527221824486e-11, 3.290094852503711e-11]], [[-2.5738263328163356e-11, 0.0, 0.0], [0.0, -1.4374719868004145e-12, -3.7153376957680606e-11], [0.0, -3.7153376957680606e-11, -2.4300111946933455e-11]]]),
    (10408784.352852428, 30891606.52165181, [[[0.0, 4.549157115583649e-11, 1.3501170439876724e-10], [4.549157115583649e-11, 0.0, 0.0], [1.3501170439876724e-10, 0.0, 0.0]], [[4.465810631213828e-11, 0.0, 0.0], [0.0, 7.631666784915209e-11, -4.104272438259191e-11], [0.0, -4.104272438259191e-11, -3.166241445424082e-11]], [[1.325381140996177e-10, 0.0, 0.0], [0.0, 2.264956592739419e-10, -1.2180823900498856e-10], [0.0, -1.2180823900498856e-10, -9.396898001617532e-11]]]),
    (-765459.9856067967, 8237173.682071196, [[[0.0, -2.1043579722561092e-10, 2.264515772563046e-09], [-2.1043579722561092e-10, 0.0, 0.0], [2.264515772563046e-09, 0.0, 0.0]], [[-1.9545004250443267e-10, 0.0, 0.0], [0.0, -4.0033477799294085e-10, -5.6757384724500785e-11], [0.0, -5.6757384724500785e-11, 2.051614751618601e-10]], [[2.1032529153055105e-09, 0.0, 0.0], [0.0, 4.308033286269258e-09, 6.107705752185518e-10], [0.0, 6.107705752185518e-10, -2.207758387838545e-09]]]),
    (47037815.158966854, -11695631.592962258, [[[0.0, 6.234690422088641e-11, -1.5502132066824656e-11], [6.234690422088641e-11, 0.0, 0.0], [-1.5502132066824656e-11, 0.0, 0.0]], [[6.157751382948615e-11, 0.0, 0.0], [0.0, -5.150161338433282e-11, 4.361789114681212e-11], [0.0, 4.361789114681212e-11, 1.130767387931661e-10]], [[-1.5310828398944427e-11, 0.0, 0.0], [0.0, 1.2805524545531651e-11, -1.0845290836553587e-11], [0.0, -1.0845290836553587e-11, -2.8115759079987464e-11]]]),
    (3591611.5654613376, 150310.56095019353, [[[0.0, 1.2653734725702067e-08, 5.295644949542067e-10], [1.2653734725702067e-08, 0.0, 0.0], [5.295644949542067e-10, 0.0, 0.0]], [[1.0629831848640884e-08, 0.0, 0.0], [0.0, -1.2591056108282233e-08, -1.4976808403156637e-09], [0.0, -1.4976808403156637e-09, 2.313275820894935e-08]], [[4.4486324839256717e-10, 0.0, 0.0], [0.0, -5.269413665974108e-10, -6.267861741983466e-11], [0.0, -6.267861741983466e-11, 9.68116345361457e-10]]]),
    (-2242067.707351958, 2360659.7147677876, [[[0.0, -1.073472466956754e-08, 1.130252757018726e-08], [-1.073472466956754e-08, 0.0, 0.0], [1.130252757018726e-08, 0.0, 0.0]], [[-8.84754645301959e-09, 0.0, 0.0], [0.0, -5.156469762264861e-09, -1.5092871557884583e-08], [0.0, -1.5092871557884583e-08, -3.599929206826729e-09]], [[9.315528883312757e-09, 0.0, 0.0], [0.0, 5.429216253497394e-09, 1.58911944318324e-08], [0.0, 1.58911944318324e-08, 3.790343987697323e-09]]]),
    (9636011.672610693, 31891003.621087156, [[[0.0, 3.9445536789546976e-11, 1.305475542507671e-10], [3.9445536789546976e-11, 0.0, 0.0], [1.305475542507671e-10, 0.0, 0.0]], [[3.873832488324905e-11, 0.0, 0.0], [0.0, 6.834011652785546e-11, -3.256792498119107e-11], [0.0, -3.256792498119107e-11, -2.9604990251715304e-11]], [[1.2820699072397835e-10, 0.0, 0.0], [0.0, 2.2617603399653004e-10, -1.0778565331740242e-10], [0.0, -1.0778565331740242e-10, -9.797962926957601e-11]]]),
    (-12371787.638958214, 6279817.000823021, [[[0.0, -7.101998855413428e-10, 3.60491583379671e-10], [-7.101998855413428e-10, 0.0, 0.0], [3.60491583379671e-10, 0.0, 0.0]], [[-6.798191181461758e-10, 0.0, 0.0], [0.0, 2.8000486193765115e-10, -8.475217469973984e-10], [0.0, -8.475217469973984e-10, -9.594919338025159e-10]], [[3.4507055731990875e-10, 0.0, 0.0], [0.0, -1.4212815024177312e-10, 4.3019502360369166e-10], [0.0, 4.3019502360369166e-10, 4.870301636177274e-10]]]),
    (6765633.428106836, 5520546.632991443, [[[0.0, 1.5784137800388686e-09, 1.2879365947704245e-09], [1.5784137800388686e-09, 0.0, 0.0], [1.2879365947704245e-09, 0.0, 0.0]], [[1.471821332164102e-09, 0.0, 0.0], [0.0, 2.708650663267896e-10, -2.266359404717619e-09], [0.0, -2.266359404717619e-09, 1.1990932257036183e-09]], [[1.2009604697009322e-09, 0.0, 0.0], [0.0, 2.2101747689924497e-10, -1.8492788463656582e-09], [0.0, -1.8492788463656582e-09, 9.784228099471942e-10]]]),
    (-13580796.765696252, -7374756.2641975535, [[[0.0, -5.628728231437215e-10, -3.056558425872967e-10], [-5.628728231437215e-10, 0.0, 0.0], [-3.056558425872967e-10, 0.0, 0.0]], [[-5.412314101469912e-10, 0.0, 0.0], [0.0, 1.8330465437251488e-10, 6.98984206954011e-10], [0.0, 6.98984206954011e-10, -7.243239487900963e-10]], [[-2.9390394401924967e-10, 0.0, 0.0], [0.0, 9.953960518022427e-11, 3.7956816877120663e-10], [0.0, 3.7956816877120663e-10, -3.9332836436671433e-10]]]),
    (-3436280.6543454914, 1339625.4359662542, [[[0.0, -1.1183859252588386e-08, 4.359999614143159e-09], [-1.1183859252588386e-08, 0.0, 0.0], [4.359999614143159e-09, 0.0, 0.0]], [[-9.438441357909795e-09, 0.0, 0.0], [0.0, 6.997429084205651e-09, -1.0738635302192272e-08], [0.0, -1.0738635302192272e-08, -1.6361873869729252e-08]], [[3.679552804554066e-09, 0.0, 0.0], [0.0, -2.727930262540618e-09, 4.186430168382735e-09], [0.0, 4.186430168382735e-09, 6.378635688049114e-09]]]),
    (39006026.530331776, -4826226.548765258, [[[0.0, 9.710867164184925e-11, -1.201528304424384e-11], [9.710867164184925e-11, 0.0, 0.0], [-1.201528304424384e-11, 0.0, 0.0]], [[9.563188499113814e-11, 0.0, 0.0], [0.0, -9.273831033522316e-11, 3.5321679857114386e-11], [0.0, 3.5321679857114386e-11, 1.8836453764107902e-10]], [[-1.1832559819795901e-11, 0.0, 0.0], [0.0, 1.1474537020053618e-11, -4.370361306626084e-12], [0.0, -4.370361306626084e-12, -2.3306396812870542e-11]]]),
];

/// d(E, F) with E = (0, 1e8, 0), F = (1e7, 1e8, 2e5).
pub const SCHWARZSCHILD_INTERVAL: f64 = 9982985.525382675;
/// l(E, F, G) with G = (2e7, 1e8, 4e5).
pub const SCHWARZSCHILD_THREE_POINT: f64 = 19965971.080792278;
/// g_xx at (1e8, 0).
pub const SCHWARZSCHILD_GXX_ON_AXIS: f64 = -1.0030090270812437;
/// Flat deviation of E = (0,0,0), F = (4,1,0), G = (8,3,0) over spatial axes.
pub const FLAT_DEVIATION_SPATIAL: f64 = 0.11948555400256813;
/// Same triple over all axes.
pub const FLAT_DEVIATION_ALL: f64 = 0.13852339371657763;
/// d g_tt / dx at (1e8, 0).
pub const SCHWARZSCHILD_DGTT_DX: f64 = 3e-11;
/// d g_xy / dy at (4e7, 3e7): an off-diagonal entry with curvature in every term.
pub const SCHWARZSCHILD_DGXY_DY: f64 = 7.936229044285836e-12;
pub const VELOCITY_STATES_1E7_2D: u64 = 400000040000001;
/// Exact perihelion advance (deg per revolution) of the geodesic from (1e8, 0) with v = (0, 0.02).
pub const EXACT_PRECESSION_DEG: f64 = 6.3487381493077795;
/// Its perihelion distance (cm).
pub const EXACT_PERIHELION_CM: f64 = 15084713.500835225;
