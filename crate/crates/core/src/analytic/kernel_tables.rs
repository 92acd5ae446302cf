//! Frozen extended-precision moment constants for the 18-term inversion
//! weight table. Each entry is an exact rational (weights times integer
//! powers over 9!) times ln 2, rounded to an (hi, lo) double-double pair;
//! regenerating them requires only the weight recurrence and big-rational
//! arithmetic. The moment-series kernel consumes them verbatim.

use crate::dd::Dd;

/// ln2 * sum_k omega_k ln k.
pub(crate) const SK0: Dd = Dd { hi: -1.0000000006452405, lo: -5.0488235791390374e-17 };
/// ln2 * sum_k omega_k k ln k.
pub(crate) const LK1: Dd = Dd { hi: 1.442243235892965, lo: -8.738632811435051e-17 };
/// ln2 * sum_k omega_k k.
pub(crate) const LM1: Dd = Dd { hi: -3.438230062301316e-05, lo: 6.997066763411883e-22 };
/// ln2 * euler * sum_k omega_k k.
pub(crate) const LGM1: Dd = Dd { hi: -1.9846002514956928e-05, lo: -1.1044652947354023e-21 };

/// ln2 * (sum_k omega_k k^m) / (m * m!) for m = 1..=120.
pub(crate) const SC: [Dd; 120] = [
    Dd { hi: -3.438230062301316e-05, lo: 6.997066763411883e-22 },
    Dd { hi: -0.2112706417532601, lo: -1.3871028185051734e-17 },
    Dd { hi: -63.58553990947529, lo: -1.8699086414545237e-15 },
    Dd { hi: -4630.085126575667, lo: -3.958094316696034e-13 },
    Dd { hi: -140045.4678504705, lo: 1.0290219917769076e-11 },
    Dd { hi: -2288430.297947729, lo: -1.983562125336541e-10 },
    Dd { hi: -23540477.184734624, lo: 1.8507624511311886e-09 },
    Dd { hi: -168303021.17417443, lo: 4.934033613156741e-09 },
    Dd { hi: -895676807.8053524, lo: -4.6016374212158625e-08 },
    Dd { hi: -3729054276.5338297, lo: 1.069984012299711e-07 },
    Dd { hi: -12607812531.752878, lo: -2.3250020790428637e-07 },
    Dd { hi: -35625052263.87268, lo: -3.0322955933595436e-06 },
    Dd { hi: -86054469813.32492, lo: -5.986401374931556e-06 },
    Dd { hi: -180959054335.8916, lo: 1.9127238453076224e-06 },
    Dd { hi: -336210771681.8697, lo: 2.47571948343331e-05 },
    Dd { hi: -558721899559.7914, lo: -3.739550086945137e-05 },
    Dd { hi: -839076009111.315, lo: -3.3464151070787414e-05 },
    Dd { hi: -1148733264335.1968, lo: 3.53863932787142e-05 },
    Dd { hi: -1444433735385.4832, lo: 9.982582447091336e-05 },
    Dd { hi: -1678978648408.855, lo: -1.0721587603944842e-06 },
    Dd { hi: -1814303677333.2175, lo: -0.00010086497302374811 },
    Dd { hi: -1831645990803.2378, lo: 8.532057537153319e-05 },
    Dd { hi: -1735160136778.0603, lo: 8.913218035946135e-05 },
    Dd { hi: -1548435173069.1797, lo: 9.053153214269665e-05 },
    Dd { hi: -1306206159078.105, lo: -7.818870511857292e-05 },
    Dd { hi: -1044845251478.0989, lo: 5.8818597538408265e-05 },
    Dd { hi: -794763213134.8746, lo: 1.4515547995616984e-05 },
    Dd { hi: -576339369500.549, lo: 5.283754510418873e-05 },
    Dd { hi: -399376628164.59576, lo: -2.109592092993877e-05 },
    Dd { hi: -265016014131.62683, lo: 1.1384571557061765e-05 },
    Dd { hi: -168729347616.9967, lo: 8.893901767648512e-06 },
    Dd { hi: -103255604004.19537, lo: -6.316709289811809e-07 },
    Dd { hi: -60835311420.45011, lo: -2.1176986753046257e-06 },
    Dd { hi: -34560279867.93216, lo: -1.109678353344417e-06 },
    Dd { hi: -18957884262.300137, lo: -8.18127925824439e-07 },
    Dd { hi: -10054525685.690136, lo: 1.212981326994943e-07 },
    Dd { hi: -5162036006.391449, lo: 1.564285385069218e-08 },
    Dd { hi: -2568391353.7290173, lo: -1.9803162503832426e-08 },
    Dd { hi: -1239774822.753542, lo: -9.263100288404703e-08 },
    Dd { hi: -581162019.7109716, lo: -5.498807054113063e-08 },
    Dd { hi: -264806734.9840779, lo: -4.103401085667378e-09 },
    Dd { hi: -117386554.43194406, lo: -6.361866139353436e-09 },
    Dd { hi: -50666738.52134667, lo: 6.553520669134206e-10 },
    Dd { hi: -21309830.203167483, lo: 1.4287211733045914e-09 },
    Dd { hi: -8739925.863502473, lo: -6.858054744820905e-10 },
    Dd { hi: -3497897.472316402, lo: -1.3141532707265235e-10 },
    Dd { hi: -1366981.790346898, lo: 9.256951427329408e-12 },
    Dd { hi: -521968.8523081799, lo: 2.519749932166963e-11 },
    Dd { hi: -194853.7377274846, lo: -9.31630681344975e-12 },
    Dd { hi: -71153.86267930728, lo: 4.15983579467598e-12 },
    Dd { hi: -25429.932468600207, lo: -4.4785854415714304e-13 },
    Dd { hi: -8899.57448115346, lo: 5.060019101830901e-13 },
    Dd { hi: -3051.2696380820757, lo: 2.270132517389668e-13 },
    Dd { hi: -1025.3676375872533, lo: -2.3267726728087933e-14 },
    Dd { hi: -337.87623877122456, lo: 1.2992370013957516e-14 },
    Dd { hi: -109.21886056773918, lo: -4.705756155990313e-15 },
    Dd { hi: -34.64771460408093, lo: 3.287005130410412e-15 },
    Dd { hi: -10.790861212105666, lo: -4.737832490837026e-17 },
    Dd { hi: -3.3006753902793013, lo: -5.669672211490834e-17 },
    Dd { hi: -0.9919020782671243, lo: -2.880461167799912e-17 },
    Dd { hi: -0.29295571622697336, lo: 2.1552015850131643e-17 },
    Dd { hi: -0.08506373459897623, lo: -4.403799943481431e-18 },
    Dd { hi: -0.024290297118213074, lo: 3.7979967616781203e-19 },
    Dd { hi: -0.006823364341626621, lo: -3.8697506441149537e-19 },
    Dd { hi: -0.0018861151220610428, lo: 1.202788696215229e-20 },
    Dd { hi: -0.0005131728272958458, lo: 7.58470271030545e-21 },
    Dd { hi: -0.00013746826853572783, lo: -5.227861452523973e-21 },
    Dd { hi: -3.626586244803613e-05, lo: -1.645858242307304e-23 },
    Dd { hi: -9.424530772966726e-06, lo: 1.5485034904853534e-22 },
    Dd { hi: -2.4132001643493886e-06, lo: -1.4893306050588897e-22 },
    Dd { hi: -6.089771384645437e-07, lo: -1.893833103424288e-23 },
    Dd { hi: -1.514891189273895e-07, lo: 1.0939233070674212e-23 },
    Dd { hi: -3.7156111663179315e-08, lo: -1.4002261720505104e-24 },
    Dd { hi: -8.987521679176794e-09, lo: 3.027099308917292e-25 },
    Dd { hi: -2.144371879094357e-09, lo: -1.8848564627118223e-25 },
    Dd { hi: -5.0477463927686e-10, lo: 3.0451276427919296e-26 },
    Dd { hi: -1.1725095333670346e-10, lo: 4.862305056119423e-27 },
    Dd { hi: -2.6880559233986213e-11, lo: 6.115923098837797e-29 },
    Dd { hi: -6.083345627877507e-12, lo: -8.777215427569309e-29 },
    Dd { hi: -1.3592704065860903e-12, lo: 4.779205938015015e-29 },
    Dd { hi: -2.9991839481704333e-13, lo: 9.82287782413978e-30 },
    Dd { hi: -6.535921007993239e-14, lo: 2.7414455880195856e-30 },
    Dd { hi: -1.4069785977954546e-14, lo: 5.064298790479102e-32 },
    Dd { hi: -2.9923597682757264e-15, lo: 2.165365559101807e-32 },
    Dd { hi: -6.28857865817527e-16, lo: -1.8512045039305572e-32 },
    Dd { hi: -1.3060762554344465e-16, lo: -6.712052530408857e-33 },
    Dd { hi: -2.6811750961766844e-17, lo: -1.0749999436163191e-33 },
    Dd { hi: -5.441066612509138e-18, lo: 1.4919640292971301e-34 },
    Dd { hi: -1.0917046753281434e-18, lo: -3.0867119453312234e-36 },
    Dd { hi: -2.1659432835119064e-19, lo: 5.618311904768707e-36 },
    Dd { hi: -4.249783783181643e-20, lo: 2.7810461323509287e-36 },
    Dd { hi: -8.247457633352382e-21, lo: -7.347423542672096e-37 },
    Dd { hi: -1.5832925311373383e-21, lo: -7.521686173514351e-38 },
    Dd { hi: -3.0070666317804527e-22, lo: -7.133107889125805e-39 },
    Dd { hi: -5.650898575756566e-23, lo: 3.985465244105665e-39 },
    Dd { hi: -1.0508363624531435e-23, lo: -1.4331133253368742e-40 },
    Dd { hi: -1.9339496937169195e-24, lo: 1.6224096981983575e-40 },
    Dd { hi: -3.522865093985745e-25, lo: -1.38962029854942e-41 },
    Dd { hi: -6.35235536140046e-26, lo: -1.3652632326783888e-42 },
    Dd { hi: -1.1339858073214213e-26, lo: -4.9039187950996924e-43 },
    Dd { hi: -2.004285713140564e-27, lo: -1.0406431535601453e-43 },
    Dd { hi: -3.5078011048634667e-28, lo: -1.5128228704998902e-44 },
    Dd { hi: -6.079625173338211e-29, lo: 4.200928554221263e-45 },
    Dd { hi: -1.043584082144109e-29, lo: -1.9471130557504728e-48 },
    Dd { hi: -1.774305037528396e-30, lo: -8.427598191220149e-47 },
    Dd { hi: -2.988270232465517e-31, lo: 1.6181311052974943e-47 },
    Dd { hi: -4.985881058767337e-32, lo: -2.2113179334851628e-48 },
    Dd { hi: -8.242013832440457e-33, lo: 2.933593161958946e-49 },
    Dd { hi: -1.3499953904942536e-33, lo: 2.949273012761698e-50 },
    Dd { hi: -2.191170353215181e-34, lo: -6.81395858780899e-51 },
    Dd { hi: -3.5245329299989e-35, lo: -1.1019916798023878e-51 },
    Dd { hi: -5.618812338295527e-36, lo: 3.069027682879231e-52 },
    Dd { hi: -8.878513836125766e-37, lo: 7.7386369392353805e-53 },
    Dd { hi: -1.390667868925452e-37, lo: -3.1800368258222427e-54 },
    Dd { hi: -2.1593742500862602e-38, lo: 1.2481346214479127e-54 },
    Dd { hi: -3.3241996447832576e-39, lo: -1.2958126047933958e-55 },
    Dd { hi: -5.0738039551870594e-40, lo: -5.96457746419025e-57 },
    Dd { hi: -7.678913912899064e-41, lo: -2.3598134977508787e-58 },
    Dd { hi: -1.1524364895929797e-41, lo: 7.991923831088561e-58 },
    Dd { hi: -1.7152059853930194e-42, lo: 4.926296190691057e-59 },
];

/// ln2 * (sum_k omega_k k^(m+1)) / (m * m!) for m = 1..=120.
pub(crate) const SC1: [Dd; 120] = [
    Dd { hi: -0.8450825670130404, lo: -5.5484112740206934e-17 },
    Dd { hi: -286.1349295926388, lo: -1.3091615289443549e-15 },
    Dd { hi: -24693.787341736894, lo: -8.98324033207314e-13 },
    Dd { hi: -875284.1740654407, lo: 4.9761959257689875e-11 },
    Dd { hi: -16476698.145223651, lo: 8.070094488348388e-10 },
    Dd { hi: -192247230.3419994, lo: -1.64924632550724e-09 },
    Dd { hi: -1538770479.3067377, lo: 7.917096147765627e-08 },
    Dd { hi: -9068727679.029194, lo: -1.3809024263345766e-07 },
    Dd { hi: -41433936405.93144, lo: 2.46043687998579e-06 },
    Dd { hi: -152554531634.20984, lo: 9.965983324201885e-06 },
    Dd { hi: -466364320545.24243, lo: 2.6888300868747794e-05 },
    Dd { hi: -1211933783204.3262, lo: 0.00012168516631346392 },
    Dd { hi: -2728305742294.981, lo: -8.384229817843892e-05 },
    Dd { hi: -5403387402030.048, lo: -0.0003388980406089323 },
    Dd { hi: -9535520419153.773, lo: -0.0001173832148386368 },
    Dd { hi: -15155810414573.127, lo: 0.0002195283806589023 },
    Dd { hi: -21893504567329.633, lo: 0.0007893127307237295 },
    Dd { hi: -28968921026342.188, lo: -0.0004257805133889042 },
    Dd { hi: -35346918913870.63, lo: 0.0016221650787285372 },
    Dd { hi: -40005396085197.445, lo: -0.003432568748923646 },
    Dd { hi: -42215079026131.766, lo: 0.001315394451420098 },
    Dd { hi: -41722714197981.54, lo: 0.00028997450159795704 },
    Dd { hi: -38778202595123.805, lo: 0.002606898370182316 },
    Dd { hi: -34015785392658.984, lo: -0.0015275378937128366 },
    Dd { hi: -28252615599967.793, lo: 0.0009263923774385595 },
    Dd { hi: -22283937783666.293, lo: 0.000759119535627107 },
    Dd { hi: -16735187618090.012, lo: -0.0007082310977154087 },
    Dd { hi: -11995562295943.752, lo: -2.545931815458955e-05 },
    Dd { hi: -8224634921326.35, lo: 3.340588452950308e-05 },
    Dd { hi: -5404963435331.128, lo: 0.000459868767873674 },
    Dd { hi: -3410765758074.0664, lo: -0.00014687358165408804 },
    Dd { hi: -2070301691777.1929, lo: -5.4186539611343353e-05 },
    Dd { hi: -1210657076585.7449, lo: 9.79943450313289e-05 },
    Dd { hi: -683041418274.0491, lo: 4.7434104964908e-06 },
    Dd { hi: -372304722532.98334, lo: 2.1930112642244133e-05 },
    Dd { hi: -196300758131.9415, lo: 8.224257501294377e-06 },
    Dd { hi: -100236678777.96489, lo: -9.790584104536221e-07 },
    Dd { hi: -49623618563.37204, lo: 1.8637879698829466e-06 },
    Dd { hi: -23842544398.398838, lo: 1.1675254213093843e-06 },
    Dd { hi: -11128503037.705873, lo: -4.578026674873542e-07 },
    Dd { hi: -5050484927.267056, lo: -3.245974252916618e-07 },
    Dd { hi: -2230542845.8564286, lo: 1.0300211098183512e-07 },
    Dd { hi: -959437936.5891219, lo: -3.2705138203712904e-08 },
    Dd { hi: -402235224.39982975, lo: 7.044915688009082e-09 },
    Dd { hi: -164478912.25381127, lo: 4.830861724660048e-09 },
    Dd { hi: -65644842.93209343, lo: 3.688979310545676e-09 },
    Dd { hi: -25587579.48336269, lo: -3.2970347622634056e-11 },
    Dd { hi: -9746746.339243554, lo: 1.3668239197709276e-10 },
    Dd { hi: -3630299.1162911872, lo: -1.1443912784721607e-10 },
    Dd { hi: -1322865.0870165827, lo: -8.819914338557075e-11 },
    Dd { hi: -471851.94896154816, lo: 4.001489154229948e-12 },
    Dd { hi: -164827.2387187029, lo: 7.339566645878431e-12 },
    Dd { hi: -56414.566626498694, lo: 2.5294175972544464e-12 },
    Dd { hi: -18927.326338573228, lo: 8.193943839465145e-13 },
    Dd { hi: -6227.460849826002, lo: 4.4274583401909623e-13 },
    Dd { hi: -2010.1861562260524, lo: -4.1743986614671566e-14 },
    Dd { hi: -636.8501248688326, lo: -3.059457869713651e-14 },
    Dd { hi: -198.09743161314222, lo: 9.843328333769178e-15 },
    Dd { hi: -60.52283867392623, lo: 1.0424505766682453e-15 },
    Dd { hi: -18.168137001342796, lo: -7.876425374771354e-16 },
    Dd { hi: -5.360409767187945, lo: -1.7740951389023373e-16 },
    Dd { hi: -1.5549707945514144, lo: 8.508458555696243e-17 },
    Dd { hi: -0.4436269895762324, lo: 5.68000681372284e-18 },
    Dd { hi: -0.12451306860481103, lo: 4.653796917011661e-19 },
    Dd { hi: -0.03439047439539545, lo: 2.102902964549304e-18 },
    Dd { hi: -0.009349925112983064, lo: -4.8793855897171537e-20 },
    Dd { hi: -0.002502885790443568, lo: -5.615510256082096e-20 },
    Dd { hi: -0.0006598557501484497, lo: 2.738385684961452e-20 },
    Dd { hi: -0.00017137218558423197, lo: 1.3386033573355627e-20 },
    Dd { hi: -4.385505364285378e-05, lo: 1.2135698717363944e-21 },
    Dd { hi: -1.106083933126179e-05, lo: -6.328868934104356e-22 },
    Dd { hi: -2.7500683201817025e-06, lo: 7.163419658683085e-23 },
    Dd { hi: -6.741872426735907e-07, lo: -1.7813127245568734e-23 },
    Dd { hi: -1.6300124080953728e-07, lo: -8.648973095925162e-24 },
    Dd { hi: -3.8874377552841906e-08, lo: -1.9341267336388386e-24 },
    Dd { hi: -9.147117135964668e-09, lo: -2.941209700524543e-25 },
    Dd { hi: -2.1239132776567806e-09, lo: -1.3196799157982688e-25 },
    Dd { hi: -4.867456418408144e-10, lo: 9.764709707504843e-27 },
    Dd { hi: -1.1011810888798706e-10, lo: -5.126445049111357e-27 },
    Dd { hi: -2.4597057354932766e-11, lo: 5.146668657067546e-28 },
    Dd { hi: -5.425621340462535e-12, lo: -3.577025287199782e-28 },
    Dd { hi: -1.1820336049040106e-12, lo: -2.3355503101319495e-29 },
    Dd { hi: -2.543866328307654e-13, lo: 2.4042979137909723e-29 },
    Dd { hi: -5.4089262863471824e-14, lo: 2.50700309190463e-30 },
    Dd { hi: -1.1364399982580197e-14, lo: 3.278028638007118e-31 },
    Dd { hi: -2.3597458491815494e-15, lo: -2.395326061280597e-32 },
    Dd { hi: -4.843174695088594e-16, lo: 2.7447955272362397e-32 },
    Dd { hi: -9.826582651447982e-17, lo: 3.908869920935336e-33 },
    Dd { hi: -1.9712517524097125e-17, lo: -4.678652084819764e-34 },
    Dd { hi: -3.910273278725242e-18, lo: -3.0691238350429182e-34 },
    Dd { hi: -7.671041913043359e-19, lo: -3.236020198966331e-35 },
    Dd { hi: -1.488467076283352e-19, lo: -6.717532103440166e-36 },
    Dd { hi: -2.857036640689471e-20, lo: -1.2359644051899492e-37 },
    Dd { hi: -5.425463792149256e-21, lo: 1.5567661021945865e-37 },
    Dd { hi: -1.0194218859334917e-21, lo: 4.747047094155877e-38 },
    Dd { hi: -1.8954721529356764e-22, lo: -5.4466213252801814e-39 },
    Dd { hi: -3.48799962501434e-23, lo: 2.8220562524932653e-39 },
    Dd { hi: -6.353003560927134e-24, lo: 2.8808177809294775e-40 },
    Dd { hi: -1.1454402094155771e-24, lo: -5.394078183687021e-41 },
    Dd { hi: -2.0445718559746895e-25, lo: -2.6158681363295257e-42 },
    Dd { hi: -3.6133824450494564e-26, lo: 9.500835593912106e-44 },
    Dd { hi: -6.3234062219554e-27, lo: 2.3811823192181005e-43 },
    Dd { hi: -1.095864605094241e-27, lo: -2.6325757537035396e-44 },
    Dd { hi: -1.8809339460337081e-28, lo: -2.5507457029628783e-45 },
    Dd { hi: -3.1977337459030994e-29, lo: -1.4747499529791508e-45 },
    Dd { hi: -5.3852219096063435e-30, lo: 4.589883192240213e-47 },
    Dd { hi: -8.984565359026681e-31, lo: 3.382056692200553e-47 },
    Dd { hi: -1.4851199291168727e-31, lo: -6.469343474458247e-48 },
    Dd { hi: -2.4324001168718984e-32, lo: 1.302548699674612e-48 },
    Dd { hi: -3.9477972936833134e-33, lo: -3.0707631968838212e-49 },
    Dd { hi: -6.3497641415837015e-34, lo: -2.3877256302166783e-50 },
    Dd { hi: -1.0122298497633026e-34, lo: -7.591200235618952e-51 },
    Dd { hi: -1.5993911172172721e-35, lo: 1.1288279781465907e-51 },
    Dd { hi: -2.505063548893929e-36, lo: 4.613654024216131e-53 },
    Dd { hi: -3.8896026452350884e-37, lo: 7.171429544297616e-54 },
    Dd { hi: -5.987526064013419e-38, lo: 2.5088564700109086e-54 },
    Dd { hi: -9.138563873778339e-39, lo: -1.2847309706551853e-55 },
    Dd { hi: -1.383021451620863e-39, lo: -1.4947736978697298e-56 },
    Dd { hi: -2.0755433772823093e-40, lo: 1.7613561772346207e-56 },
    Dd { hi: -3.088997752086803e-41, lo: 1.0198004525151627e-57 },
];
