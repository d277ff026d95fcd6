"""Generated by tools/gen_bessel_tables.py; do not edit by hand."""

from math import nan

X_LO = 0.5
X_HI = 25.5

J0_ZERO_HI = [nan, 2.404825557695773, nan, nan, nan, 5.520078110286311, nan, nan, 8.653727912911013, nan, nan, 11.791534439014281, nan, nan, 14.930917708487787, nan, nan, 18.071063967910924, nan, nan, 21.21163662987926, nan, nan, 24.352471530749302, nan]
J0_ZERO_LO = [nan, -1.176691651530894e-16, nan, nan, nan, 8.088597146146722e-17, nan, nan, -2.92812607320779e-16, nan, nan, 2.812956912778735e-16, nan, nan, -7.070514505983074e-16, nan, nan, -9.658048089426209e-16, nan, nan, 4.947077428784068e-16, nan, nan, 9.169067133951066e-16, nan]
J0_COEFFS = [
    [0.7450991583004762, -0.21498844315022766, -0.020024348543016577, 0.0016717073853662232, 7.40546027067261e-05, -4.337617410423956e-06, -1.2499170981301522e-07, 5.634216434857903e-09, 1.1998302652821333e-10, -4.394232886465046e-12, -7.41277139260881e-14, 2.2857967616547454e-15, 3.1907426924769744e-17, -8.495571646795158e-19],
    [-0.5450156931049627, 0.028793738222393762, 0.008018975556701974, -0.0001464958276941483, -2.0256831194744364e-05, 2.8182488899050335e-07, 2.5897819344494103e-08, -2.905515472919244e-10, -1.9987511520977037e-11, 1.877563318080599e-13, 1.0320042987941891e-14, -8.334977080014591e-17, -3.814390474684185e-18],
    [-0.23704952094902307, -0.16678254219286842, 0.022897906790241496, 0.0009124642023489724, -0.00010433542357363368, -1.9059018533318807e-06, 1.9154673783354102e-07, 2.1343332974378025e-09, -1.9223530988433316e-10, -1.4939191193028865e-12, 1.220438598155042e-13, 7.1554347412044085e-16, -5.350021460592839e-17, -2.4918038001528334e-19],
    [-0.3736471471900771, 0.030594477899833245, 0.02340717873940744, -0.0008045563816549151, -9.531982739187353e-05, 2.697899598486637e-06, 1.6394932307899314e-07, -3.919956345948196e-09, -1.5755088792413767e-10, 3.252263172622145e-12, 9.696630587169168e-14, -1.7586118747611716e-15, -4.152761403540718e-17, 6.710805974388498e-19],
    [-0.1706316742988832, 0.15857462248608914, 0.00695178553494741, -0.0017301726946122478, -1.3305965438611404e-05, 4.876507392707149e-06, 5.5214958371510614e-09, -6.520359737056105e-09, 6.4175061693366066e-12, 5.143939346549043e-12, -9.250301130723768e-15, -2.6878697367007672e-15, 5.692006679524829e-18, 1.0004272483667358e-18],
    [0.3085060797645373, -0.03798035307465713, -0.005376156577979729, 0.0002617081471763849, 1.3113946409368478e-05, -5.628754351846957e-07, -1.57577726443273e-08, 6.12330424786453e-10, 1.1443949417102315e-11, -4.076582842780942e-13, -5.597639577992317e-15, 1.842738163975236e-16, 1.974093342988518e-18, -6.042607798756788e-20],
    [0.28155711948157897, 0.002929537328682844, -0.018430898481703598, 0.0001941305826768314, 9.108147202813643e-05, -1.1438451666860525e-06, -1.7091246971747062e-07, 2.085147521625953e-09, 1.7166682585358128e-10, -1.9556437600952196e-12, -1.0828930337829597e-13, 1.141073805795427e-15, 4.706223486487955e-17, -4.583822140164121e-19],
    [0.16286038324899652, -0.11347165741015502, -0.00875562471822024, 0.0012754648698255725, 3.474770996138595e-05, -4.016223363750176e-06, -5.14197083501423e-08, 5.7496998328304085e-09, 4.064726771202308e-11, -4.731114135949821e-12, -2.013786981060669e-14, 2.5406278953754647e-15, 6.830417292704222e-18, -9.633715163212007e-19],
    [-0.25591628851537523, 0.02198910423756037, 0.004944481453060764, -0.0001603306946913168, -1.3866620533721532e-05, 3.8458919646015867e-07, 1.818741199902905e-08, -4.515964824572623e-10, -1.3968195295502223e-11, 3.166952724556631e-13, 7.093606419897378e-15, -1.4847593529663846e-16, -2.5685020425958577e-18, 4.9996442530150544e-20],
    [-0.23053267612558584, -0.021454063800306445, 0.015323487352397278, 9.425229373777822e-05, -7.944146961555859e-05, 8.870153570283164e-08, 1.5933572506290908e-07, -5.832040327620058e-10, -1.6791508903018354e-10, 7.751516804412932e-13, 1.0945596210230341e-13, -5.408464933990637e-16, -4.866143423948908e-17, 2.426670972414216e-19],
    [-0.16162701182171899, 0.08546467250392531, 0.00951953702069583, -0.000970708325265652, -4.367395271019526e-05, 3.16374252893077e-06, 7.753935669110434e-08, -4.7499111024797e-09, -7.267193766206251e-11, 4.06570526885277e-12, 4.2433800676486583e-14, -2.249827666281403e-15, -1.702833312990166e-17, 8.726249629933996e-19],
    [0.22421544989395725, -0.012462790501825926, -0.00453457476093862, 9.574553894895995e-05, 1.3453927416892446e-05, -2.4406973699156894e-07, -1.869849241202986e-08, 3.0538473904851353e-10, 1.5033546421900254e-11, -2.2566323689763437e-13, -7.902159924509295e-15, 1.1021084132049674e-16, 2.936363897780945e-18, -3.831006666033173e-20],
    [0.193862590496934, 0.03432798331611785, -0.012994603830162184, -0.00027602189714624867, 6.87656818636537e-05, 5.94687300611824e-07, -1.4221306232535742e-07, -5.16460693522538e-10, 1.5494169734915395e-10, 1.7832321812486222e-13, -1.0391730714518445e-13, 2.0518516273063773e-17, 4.7260279609427837e-17, -4.591552546711833e-20],
    [0.16112207096318745, -0.06445859489999818, -0.009903137769310073, 0.0007388958587701804, 4.8175472158099665e-05, -2.4536730206078112e-06, -9.181316721642657e-08, 3.782567115383059e-09, 9.257802444025983e-11, -3.3326907447957605e-12, -5.77799756234148e-14, 1.893259745364401e-15, 2.4594838164892817e-17, -7.508128563332318e-19],
    [-0.20171557383632654, 0.0056577231966348064, 0.004177866015630195, -4.916817276544266e-05, -1.2751887819100958e-05, 1.3663610876338514e-07, 1.829405425774905e-08, -1.8338014006679971e-10, -1.5170069702737702e-11, 1.4371812256328636e-13, 8.190782115154517e-15, -7.364960038216816e-17, -3.112000932531531e-18, 2.6617848482721242e-20],
    [-0.16379322099607635, -0.04397876163415493, 0.011046576585483109, 0.00040481418455278725, -5.915181658216848e-05, -1.0748841542354785e-06, 1.2444700892243892e-07, 1.3162636309928113e-09, -1.383838167254045e-10, -9.130855198736228e-13, 9.47624066655265e-14, 4.0316054913596097e-16, -4.3921622601245026e-17, -1.2182541464828245e-19],
    [-0.15974948284413001, 0.04718121986129238, 0.010054253685549679, -0.0005479192671513295, -5.041591847326057e-05, 1.8496661537495312e-06, 9.959858771144489e-08, -2.908825623480418e-09, -1.0437521121146252e-10, 2.6199003081992933e-12, 6.764569366432598e-14, -1.5214510219318059e-15, -2.980668163716327e-17, 6.157747077291302e-19],
    [0.18407250569861483, -0.00034293574814241737, -0.0038561376468353903, 1.2886885067490729e-05, 1.195260494355555e-05, -5.13143676575877e-08, -1.7465327774087168e-08, 8.274895842576662e-11, 1.4769766026813876e-11, -7.293882913744729e-14, -8.128245009481125e-15, 4.065344295678735e-17, 3.142326750730995e-18],
    [0.1372691002526777, 0.051343200259868944, -0.009309950699127888, -0.0005001224560998147, 5.028157216960726e-05, 1.426912895281227e-06, -1.0701493194225651e-07, -1.909327683182674e-09, 1.2066015439262844e-10, 1.4731040593639319e-12, -8.387432689409516e-14, -7.376312117988935e-16, 3.945947792528255e-17, 2.589723314749797e-19],
    [0.15694884768695722, -0.03226031991973883, -0.010024532083794039, 0.0003832061634402114, 5.118119606617194e-05, -1.3217587701909214e-06, -1.0326296215919694e-07, 2.12377306791567e-09, 1.1073005711136713e-10, -1.954486055493221e-12, -7.346602457458721e-14, 1.1592312296025698e-15, 3.311116766414266e-17, -4.786374231880238e-19],
    [-0.16927318370781852, -0.004010600074801382, 0.0035547295384595707, 1.6650979734753102e-05, -1.1105909661981735e-05, -1.8568683347288217e-08, 1.640589267588396e-08, 1.0940534272123304e-12, -1.4049596884176566e-11, 1.2479632129653517e-14, 7.834705100943585e-15, -1.1660110169480766e-17, -3.068344658773559e-18],
    [-0.11290439327346954, -0.056868199860451864, 0.007705057575623899, 0.0005707478478808966, -4.193466361936916e-05, -1.686989272527029e-06, 9.00894022785561e-08, 2.3506268268821424e-09, -1.0267983964627252e-10, -1.89665621760338e-12, 7.221980800988687e-14, 9.963897827244006e-16, -3.4390071720175024e-17, -3.678098888021769e-19],
    [-0.15252269710139715, 0.019042741716727422, 0.009839149548208111, -0.00023754964373600933, -5.083058920257171e-05, 8.520748157815039e-07, 1.0396144461173992e-07, -1.4153935981110532e-09, -1.1315780026249184e-10, 1.3413579661492816e-12, 7.625800412168918e-14, -8.168676163293408e-16, -3.490947169648319e-17, 3.4543653636174537e-19],
    [0.1562566641168583, 0.00766837321583253, -0.0032644864487551455, -4.127506710218669e-05, 1.0226861982731874e-05, 7.68563651302047e-08, -1.5200607916384645e-08, -7.157140488557256e-11, 1.3123161549347699e-11, 3.90378864928465e-14, -7.385303642744107e-15, -1.3479886043102003e-17, 2.9200732567781028e-18],
    [0.0900392981663699, 0.06080180080799373, -0.006193420120921451, -0.0006213108015239896, 3.3991207004691336e-05, 1.8745701377682004e-06, -7.369676837047804e-08, -2.6724265229264577e-09, 8.483338244380036e-11, 2.210181857240849e-12, -6.029568173182012e-14, -1.1914937219347629e-15, 2.902195058107462e-17, 4.515797033575401e-19],
]

J1_ZERO_HI = [nan, nan, nan, 3.8317059702075125, nan, nan, 7.015586669815619, nan, nan, 10.173468135062722, nan, nan, 13.323691936314223, nan, nan, 16.470630050877634, nan, nan, nan, 19.615858510468243, nan, nan, 22.760084380592772, nan, nan]
J1_ZERO_LO = [nan, nan, nan, -1.5269184090088067e-16, nan, nan, -9.414165653410389e-17, nan, nan, 4.482162274768888e-16, nan, nan, 2.600408064718813e-16, nan, nan, -1.619019544798128e-15, nan, nan, nan, -1.004445634526616e-15, nan, nan, -4.925749373614922e-16, nan, nan]
J1_COEFFS = [
    [0.4199899393623781, 0.15901291066536724, -0.019973893876154523, -0.0011818776787653764, 8.659474824015613e-05, 2.995964542241029e-06, -1.5759996832300328e-07, -3.836493271336209e-09, 1.5809185301799314e-10, 2.9635775666173137e-12, -1.0053089474852833e-13, -1.5309904262103777e-15, 4.4162764280457394e-17, 5.660661785702209e-19],
    [0.5520168040802219, -0.030871982016192186, -0.024604567028886266, 0.00045221275808186943, 0.00010325220939206881, -1.4355253697775314e-06, -1.8425584209314037e-07, 2.062275059996406e-09, 1.8241611848255189e-10, -1.708691734758089e-12, -1.1491304181394354e-13, 9.253992929916368e-16, 5.012592590703182e-17, -3.539854311020829e-19],
    [0.32810932833638495, -0.18151847851981112, -0.010911512098703741, 0.001664775802120863, 3.805832948392669e-05, -4.59097505727603e-06, -5.9707582710923e-08, 6.146650728954743e-09, 5.3749617335468933e-11, -4.8791873439182366e-12, -3.1470959434980113e-14, 2.5670487019316135e-15, 1.2953426319280377e-17, -9.615991529495712e-19],
    [-0.3861733852219924, 0.03440853405112289, 0.006238797333156024, -0.00020503050949347883, -1.6025721392428232e-05, 4.252416426270542e-07, 2.047486516747394e-08, -4.5773867553099986e-10, -1.5719406565916874e-11, 3.040839320578267e-13, 8.06595508196973e-15, -1.3758944902018968e-16, -2.963230250285016e-18, 4.521518007511209e-20],
    [-0.30681688268592733, -0.05540152155345205, 0.020664724572501864, 0.00021276272612723236, -9.734776284510763e-05, -1.327208905500909e-07, 1.823850090353581e-07, -2.049904584654108e-10, -1.8506360221283637e-10, 3.6973895336060693e-13, 1.1821426292919286e-13, -2.7309186834381525e-16, -5.2005485640889463e-17, 1.2445227337651923e-19],
    [-0.262101821859434, 0.0949366418550007, 0.014521947953896535, -0.001141729794366497, -5.998631825824011e-05, 3.550011676514457e-06, 1.019000748355571e-07, -5.066952648460349e-09, -9.584434021865916e-11, 4.179942118445967e-12, 5.763694972514712e-14, -2.255176739247829e-15, -2.4140925624362156e-17, 8.596537532403526e-19],
    [0.29459784876166023, -0.009682597846436138, -0.005823452499908961, 9.253131096057677e-05, 1.6392951130848518e-05, -2.3490666982646076e-07, -2.1955725224936283e-08, 2.826928135548334e-10, 1.73137297991573e-11, -2.013922212391072e-13, -9.029990615071926e-15, 9.555256790006542e-17, 3.352238802244405e-18, -3.24895336025627e-20],
    [0.21933060742430066, 0.06949026715947276, -0.015225414792018815, -0.0005547305862891516, 8.016364588805563e-05, 1.2327730930236566e-06, -1.6082138694790566e-07, -1.299907379758597e-09, 1.7020837134579057e-10, 8.051870261416992e-13, -1.1173754840297322e-13, -3.2776628256842395e-16, 5.007899354721439e-17, 9.374748137873489e-20],
    [0.23118603577137123, -0.05664047619510316, -0.014059171964717936, 0.0007141581892280813, 6.645600156091577e-05, -2.452210880669537e-06, -1.2271397309402013e-07, 3.761753876297525e-09, 1.216263500440996e-10, -3.2618975918121457e-12, -7.570677092154898e-14, 1.823089391747477e-15, 3.247100695673827e-17, -7.131015249583446e-19],
    [-0.24552219542688902, -0.0009941695338512699, 0.0050719479385892136, -1.7686080924190668e-05, -1.524052306967361e-05, 8.018493582332996e-08, 2.1407216525323763e-08, -1.2373114731507443e-10, -1.7442389420475634e-11, 1.016488028868489e-13, 9.306269010312887e-15, -5.291177912859514e-17, -3.511210241451479e-18],
    [-0.1651366660559238, -0.07545937154295863, 0.011585357903853635, 0.0006969246226080078, -6.31419993341886e-05, -1.8586207551162657e-06, 1.3285124442680875e-07, 2.3238054702386506e-09, -1.4626644262283684e-10, -1.6965349473494234e-12, 9.894705586288878e-14, 8.170797100400395e-16, -4.536145349294947e-17, -2.802801952400474e-19],
    [-0.21012312875817263, 0.03187118413012405, 0.01325781705698814, -0.0004253271665958781, -6.602967371054459e-05, 1.553598674773345e-06, 1.2886821902581062e-07, -2.5392397880416885e-09, -1.3345140706279705e-10, 2.3200724815197423e-12, 8.584281713076871e-14, -1.3509071098641217e-15, -3.773478200418087e-17, 5.455410479527309e-19],
    [0.21278419032037707, 0.007483006746928559, -0.004439673303311655, -2.9818642648089968e-05, 1.3694085393402467e-05, 3.213658284450445e-08, -1.9837918820354046e-08, -4.164736723027704e-12, 1.6606891538918725e-11, -1.5340887150215905e-14, -9.055771741352793e-15, 1.405222178448786e-17, 3.47591845503427e-18],
    [0.12450829848158855, 0.07845649515577742, -0.008817782636815638, -0.0007686069987031636, 4.8967668426527914e-05, 2.2005558264310485e-06, -1.057919856283127e-07, -2.96018676318904e-09, 1.1989360241293607e-10, 2.3100188992741487e-12, -8.326439971131676e-14, -1.1801256624435766e-15, 3.9029084716883985e-17, 4.265694712785066e-19],
    [0.19264932843305255, -0.013316669040419133, -0.012391230858256394, 0.00020937347124549237, 6.335172464762275e-05, -8.475494876276855e-07, -1.2746146665956566e-07, 1.4979686524024323e-09, 1.3600968853645393e-10, -1.4581848303433144e-12, -8.980016856279575e-14, 8.934191974128654e-16, 4.033583445830177e-17, -3.758324605163169e-19],
    [-0.18816008505011153, -0.012057687236009487, 0.003904666581741892, 6.306354780276604e-05, -1.216113252091888e-05, -1.1368324541377279e-07, 1.7906633058115554e-08, 1.0273063526852929e-10, -1.5265576257130672e-11, -5.500705228662653e-14, 8.468964036722778e-15, 1.912490871033629e-17, -3.300354257054149e-18],
    [-0.0910933801047803, -0.07962976181762797, 0.0065381192356089215, 0.0008042676667694557, -3.691197020703243e-05, -2.3870288027134692e-06, 8.135286795819223e-08, 3.3373023612078456e-09, -9.424949925948495e-11, -2.7043975589548156e-12, 6.691183568960518e-14, 1.430187618223529e-15, -3.200927539426645e-17, -5.331003603080535e-19],
    [-0.1764512185255025, -0.0015696367251966312, 0.01148391819939528, -3.7474915388000155e-05, -5.9626444523118816e-05, 2.7697486476015456e-07, 1.2218560732026902e-07, -6.271156150216601e-10, -1.3295187728790363e-10, 7.054000239704769e-13, 8.946236241413691e-14, -4.767192733927589e-16, -4.088287439039949e-17, 2.154704025829822e-19],
    [-0.09969990820800391, 0.07367766493890414, 0.0059729846234679775, -0.0008019406541189628, -2.848484972979925e-05, 2.5645005947533625e-06, 5.340817582528856e-08, -3.857771860793755e-09, -5.2999303826305794e-11, 3.3530797703547556e-12, 3.244231079574929e-14, -1.893305409050608e-15, -1.3462523402024982e-17, 7.495313629544978e-19],
    [0.17055603204624037, -0.013132229799993669, -0.003414197611666678, 8.997689954289061e-05, 1.0244705244434348e-05, -2.1544459879993736e-07, -1.4577739874369737e-08, 2.6291609758621874e-10, 1.2052847726801914e-11, -1.9402628537647546e-13, -6.504535064795469e-15, 9.575784148054658e-17, 2.471537184088953e-18, -3.380033283865231e-20],
    [0.16053157462782572, 0.013902444338044866, -0.010533329087028184, -0.00010394168930308899, 5.525431254157205e-05, 1.946315842193011e-07, -1.1461003365889427e-07, -1.0405960990250159e-10, 1.26384724257417e-10, -5.824668442921023e-14, -8.621665656150472e-14, 1.0861241916854358e-16, 3.992684012094565e-17, -6.992281401459734e-20],
    [0.11032874965168595, -0.06097166484986824, -0.006815300138435569, 0.0006687957551229477, 3.3674036135189686e-05, -2.1588627869589236e-06, -6.574931535089663e-08, 3.2828677264227308e-09, 6.823580180335724e-11, -2.887142257989973e-12, -4.382203036443158e-14, 1.6500624055019285e-15, 1.912007544204953e-17, -6.610370664726606e-19],
    [-0.16140222644901425, 0.008216914417632953, 0.003309394789164276, -5.844117531748778e-05, -1.0119103777834266e-05, 1.4444532892617324e-07, 1.4658336720989567e-08, -1.8131352356910708e-10, -1.2333082764361134e-11, 1.3727008144334675e-13, 6.769188189567819e-15, -6.934196929705898e-17, -2.6135425609836504e-18, 2.4997649278986818e-20],
    [-0.14444976024968187, -0.024237425472709306, 0.009537788302631908, 0.00022187911037603055, -5.041102468587821e-05, -5.885757372410195e-07, 1.0548857489382571e-07, 7.197820854889368e-10, -1.1746567616028697e-10, -4.941573699080775e-13, 8.095928112099628e-14, 2.1106736021310291e-16, -3.788199637505758e-17, -5.889429529180456e-20],
    [-0.11789444513400696, 0.049005267665479635, 0.007418312963961007, -0.0005420933018919733, -3.741665432686668e-05, 1.7660101830880509e-06, 7.474842849732938e-08, -2.7122578034221223e-09, -7.951414461143809e-11, 2.4104347794888565e-12, 5.240224923248296e-14, -1.39248978394813e-15, -2.3474532646615105e-17, 5.638439434516456e-19],
]

Y0_ZERO_HI = [0.8935769662791675, nan, nan, 3.957678419314858, nan, nan, 7.086051060301773, nan, nan, 10.222345043496418, nan, nan, 13.361097473872764, nan, nan, nan, 16.50092244152809, nan, nan, 19.64130970088794, nan, nan, 22.782028047291558, nan, nan]
Y0_ZERO_LO = [2.6596231539720385e-17, nan, nan, -1.0764340697562706e-16, nan, nan, -8.835285723085408e-17, nan, nan, -7.967395050308809e-16, nan, nan, -6.626109493712529e-16, nan, nan, nan, 1.0187464212445755e-15, nan, nan, -1.3738085245174177e-15, nan, nan, 1.5905927758681248e-15, nan, nan]
Y0_COEFFS = [
    [0.8532291237128218, -0.24289162163307515, 0.02529773907170474, -0.0061511838930721095, 0.001442379524001996, -0.0003231933673867555, 7.450008557158439e-05, -1.7531902451562595e-05, 4.185154006441054e-06, -1.010751529886327e-06, 2.46458968028983e-07, -6.057902497774891e-08, 1.499139309290079e-08, -3.731479995658509e-09, 9.334707144988312e-10, -2.345444132620023e-10, 5.915988768647463e-11, -1.497333187899378e-11, 3.801363955830564e-12, -9.67732674294546e-13, 2.4697376011228824e-13, -6.317221253288305e-14, 1.6191786126889323e-14, -4.157969341537637e-15, 1.0695947958980984e-15, -2.755815382404065e-16, 7.11085386178469e-17, -1.8373325763192018e-17, 4.753424873541765e-18, -1.2312350823963516e-18, 3.192692725312744e-19],
    [0.4752733679201171, 0.056725009064604016, -0.03505699168770406, 0.0010795268550724707, 4.429941520825944e-05, 6.086867482509812e-06, -1.0236480506174149e-06, 9.392789751660434e-08, -1.0155364832786507e-08, 1.1777125857117255e-09, -1.358446260597987e-10, 1.5748028859646992e-11, -1.8399343732886404e-12, 2.1631528668390117e-13, -2.556688522548851e-14, 3.0359781727916032e-15, -3.620036841338958e-16, 4.332316006704716e-17, -5.201757768581553e-18, 6.264090871384536e-19, -7.563441541125575e-20],
    [0.3601640571653698, -0.1564693977066089, -0.016651797291650602, 0.0019492036607710404, 3.402402443845566e-05, -4.025055893178121e-06, -1.3182860798041137e-07, 1.1232187504645768e-08, -2.9938601686717486e-10, 2.2176326021561435e-11, -2.1219327372917423e-12, 1.635457558404512e-13, -1.2456380020842592e-14, 9.70692739435832e-16, -7.607410568717302e-17, 5.980528576420337e-18, -4.719068660509149e-19],
    [-0.3931321985117256, 0.027213330045824356, 0.00713726945971191, -0.00022356367852454127, -1.6580692786141297e-05, 4.020076684472859e-07, 2.4077791466362525e-08, -6.106784758815411e-10, -8.829773508443143e-12, -1.2591654127971593e-13, 3.4008160893255604e-14, -1.6341725341141767e-15, 8.417473765287412e-17, -5.075779046517863e-18, 3.0271342708999863e-19],
    [-0.28770103631928684, -0.07277314065877535, 0.020712222309152248, 0.0003856465974066727, -0.00010417648395262237, -2.981422414758375e-07, 1.8993739872421958e-07, 7.687921321940358e-11, -1.9913126798306776e-10, 5.274234005224949e-13, 1.1202361665171671e-13, 2.7267971515269377e-16, -7.815647078843036e-17, 1.2554557504998112e-18, -3.626942353375741e-20],
    [-0.27221018317647405, 0.0842083689539486, 0.015916473294711346, -0.0010928988883452738, -6.791565932803347e-05, 3.614072737884046e-06, 1.1174579480848721e-07, -5.161210757296097e-09, -1.0521081931393631e-10, 4.336136268774049e-12, 6.008007143915027e-14, -2.2485631525283653e-15, -2.8216570563813496e-17, 9.83335985605761e-19],
    [0.29551633222030205, -0.00618333815733304, -0.006028515190794738, 7.885416017494959e-05, 1.7293637695434535e-05, -2.2554059684959073e-07, -2.3027334713129653e-08, 2.7864095025498393e-10, 1.8135619409006474e-11, -2.036918997739792e-13, -9.344029126926132e-15, 9.509357735948287e-17, 3.52268752324166e-18, -3.472611998449316e-20],
    [0.20855972422211003, 0.0770890459044741, -0.014880982049488994, -0.0006446059930252273, 8.061817518689222e-05, 1.4712373469782463e-06, -1.647656800165714e-07, -1.5409618307454178e-09, 1.7498517960310348e-10, 9.557797256875436e-13, -1.1507291311516592e-13, -3.8477592886280495e-16, 5.140169310144112e-17, 1.133342383461059e-19],
    [0.23525198858460342, -0.05015751156232988, -0.014614285591547193, 0.0006626363945447063, 7.029332102799564e-05, -2.3681413528978815e-06, -1.3065875738877888e-07, 3.730878056362328e-09, 1.2900872304045988e-10, -3.2736433627232686e-12, -7.99262591187233e-14, 1.842078143965426e-15, 3.4067229955306276e-17, -7.219312907029266e-19],
    [-0.2452346849804361, -0.0030919443026803167, 0.005131551767305379, -6.278235027805064e-06, -1.5608949188958915e-05, 6.18188729091188e-08, 2.2071088678553982e-08, -1.1039217912529259e-10, -1.8003146225478238e-11, 9.585422375280833e-14, 9.598345512302418e-15, -5.132436833146257e-17, -3.614417392882822e-18],
    [-0.15755203371565646, -0.07959729785545223, 0.01123290801644029, 0.0007484477082254886, -6.224912993626385e-05, -2.0219869790883707e-06, 1.3288223300238626e-07, 2.5393987782368886e-09, -1.4771307320399952e-10, -1.849564134496438e-12, 1.0041239025628157e-13, 8.868523200365268e-16, -4.614145806033578e-17, -3.0256957711607794e-19],
    [-0.2116623063613817, 0.027391169385904024, 0.013506918112052974, -0.0003837181562192482, -6.795445102443876e-05, 1.4536328784586543e-06, 1.3357107422404313e-07, -2.4415751830871892e-09, -1.3873882443822392e-10, 2.2725762649239872e-12, 8.9229558179794e-14, -1.3385468129015943e-15, -3.916131045474888e-17, 5.444520854151547e-19],
    [0.21211954267831254, 0.008888518419309193, -0.004450414215539321, -3.8298296468637696e-05, 1.3826996655956626e-05, 4.872262803026743e-08, -2.015270452303842e-08, -1.964442564260121e-11, 1.693442181036437e-11, -6.930816829964702e-15, -9.250225806466636e-15, 1.1026493549841481e-17, 3.552147472153488e-18],
    [0.11864323680030373, 0.0809103158091991, -0.008501454875002359, -0.0008001801701005074, 4.7772430092650096e-05, 2.3085491316591462e-06, -1.0435734851993475e-07, -3.120138082978111e-09, 1.193529602690535e-10, 2.4385496065102015e-12, -8.343898535988169e-14, -1.244745222817802e-15, 3.928099575536864e-17, 4.489856905617626e-19],
    [0.19290454315071529, -0.010004056141309932, -0.012495317322898927, 0.00017632150294093858, 6.430533371758863e-05, -7.567276644742323e-07, -1.3009214823419503e-07, 1.3882138131312518e-09, 1.3934598934158743e-10, -1.3861593561855113e-12, -9.21883311515623e-14, 8.642391293148226e-16, 4.1433516430145685e-17, -3.679091082084392e-19],
    [0.09058861384038557, -0.08616481572329591, -0.005198921835453582, 0.000935949637722819, 2.34205848135692e-05, -2.9777395591597126e-06, -4.0783138530057654e-08, 4.443004658331023e-09, 3.690094965960627e-11, -3.821352982577965e-12, -2.0193623328296808e-14, 2.1324112493796552e-15, 7.324027162571988e-18, -8.341040715163576e-19],
    [-0.18205541918407872, 0.018077543085949204, 0.003550979429818594, -0.0001222805298453152, -1.0425111451642687e-05, 2.8909148589371795e-07, 1.4507390300934012e-08, -3.4800098069009705e-10, -1.17211388583282e-11, 2.5309209319485365e-13, 6.181418095865373e-15, -1.2304999014590897e-16, -2.29736353507e-18, 4.2800351977550997e-20],
    [-0.17598292893041348, -0.0041117228966990335, 0.011509071879214315, -1.1052165493772524e-05, -6.0035126738285154e-05, 1.9931773349028625e-07, 1.2354006642872518e-07, -5.238250429855129e-10, -1.3488707474021668e-10, 6.288210799925442e-13, 9.099024588668431e-14, -4.409320385556828e-16, -4.164595552458763e-17, 2.0401359797631584e-19],
    [-0.1032569350685239, 0.07239164615821395, 0.006232767216702319, -0.0007918862792536264, -2.993257194434756e-05, 2.5449961252838386e-06, 5.647181442278962e-08, -3.846356177173798e-09, -5.632187566404785e-11, 3.356803585149356e-12, 3.460289197139519e-14, -1.9016774965955854e-15, -1.439350780805297e-17, 7.547329728031452e-19],
    [0.17117740258238337, -0.01246063646753326, -0.00344918078120462, 8.624675203182685e-05, 1.0399104950713713e-05, -2.084244771190935e-07, -1.4852080440980775e-08, 2.5644306579297566e-10, 1.2312867629341933e-11, -1.9058779419670178e-13, -6.656605381063755e-15, 9.461100859283812e-17, 2.5317289217516953e-18, -3.3551715307611e-20],
    [0.1596342358748739, 0.01589275187842013, -0.010512071523255506, -0.0001251929421515625, 5.533573861218256e-05, 2.5966104822504064e-07, -1.1515796670102744e-07, -1.9538431856088532e-10, 1.2736033275997624e-10, 1.4143942665940368e-14, -8.709177258872573e-14, 7.210094161367329e-17, 4.040650086353422e-17, -5.723051562326869e-20],
    [0.11284998784269644, -0.059718966600887415, -0.007002797029049612, 0.0006577594943363861, 3.474476850579875e-05, -2.1320436255485075e-06, -6.808949749500906e-08, 3.2550503765106613e-09, 7.087657629839784e-11, -2.8731921947095352e-12, -4.561861576517806e-14, 1.6473636379981177e-15, 1.9931992084450964e-17, -6.617262280076286e-19],
    [-0.16173465920563135, 0.007647191558151889, 0.0033304304793853215, -5.5109281294648196e-05, -1.0217430276969066e-05, 1.3773542138248628e-07, 1.484185079571404e-08, -1.7454880483329794e-10, -1.251550014762631e-11, 1.332287164995549e-13, 6.8810229408125214e-15, -6.77633391471709e-17, -2.659878885045863e-18, 2.456771001482569e-20],
    [-0.14329543520094284, -0.025809661369389437, 0.009488200023681738, 0.00023900297761599582, -5.028794119941889e-05, -6.424332802952932e-07, 1.0551389544874341e-07, 7.981327010713562e-10, -1.1778694039103134e-10, -5.589527482706964e-13, 8.13597699092064e-14, 2.453536396538329e-16, -3.814008965218603e-17, -7.144387591003938e-20],
    [-0.11965863539172522, 0.04781362811431531, 0.007552518811164726, -0.0005308852628285775, -3.8201472846617725e-05, 1.7359473842424324e-06, 7.651065101786793e-08, -2.6757722710215165e-09, -8.156468312857431e-11, 2.3861485162881805e-12, 5.384531489696924e-14, -1.3827557301599317e-15, -2.415046477437662e-17, 5.614401135764399e-19],
]

Y1_ZERO_HI = [nan, 2.197141326031017, nan, nan, 5.429681040794135, nan, nan, nan, 8.596005868331169, nan, nan, 11.749154830839881, nan, nan, 14.897442128336726, nan, nan, 18.043402276727857, nan, nan, 21.188068934142212, nan, nan, 24.33194257135691, nan]
Y1_ZERO_LO = [nan, -4.8259835876454966e-17, nan, nan, 4.162514026670377e-16, nan, nan, nan, 2.8415838340063664e-16, nan, nan, 2.9466381668409186e-17, nan, nan, -6.072148995506809e-16, nan, nan, -1.4499889213148965e-15, nan, nan, 1.0863038864317323e-15, nan, nan, 2.940063934282991e-16, nan]
Y1_COEFFS = [
    [-0.8540788053501334, 0.5019875531859515, -0.07979867716117622, 0.02544003923996771, -0.00743385318456148, 0.001998568673669895, -0.0005373595094085799, 0.0001445016574957379, -3.880518324460563e-05, 1.0413122794685834e-05, -2.793087263720421e-06, 7.489736886590763e-07, -2.008014505709131e-07, 5.382824654529301e-08, -1.4428222987860021e-08, 3.867100798690896e-09, -1.0364196351773305e-09, 2.7775925865437395e-10, -7.443686069419552e-11, 1.9947889976052998e-11, -5.3456116655005226e-12, 1.4324879835516829e-12, -3.838653888647484e-13, 1.0286373440088336e-13, -2.7563969093545294e-14, 7.386147497233394e-15, -1.9792080643464256e-15, 5.303500190691201e-16, -1.4211231734301425e-16, 3.8080191700560227e-17, -1.0203872739184212e-17, 2.7341959597188105e-18, -7.326441735985967e-19, 1.9631593866313837e-19],
    [0.5396779044178384, -0.05438626707784003, -0.003154768447098552, -0.00041640463668810804, 9.083581858793299e-05, -9.607119523998171e-06, 1.1805340694847898e-06, -1.542847899430498e-07, 1.978322555590347e-08, -2.522844393536437e-09, 3.2157563482916253e-10, -4.095948932944561e-11, 5.213710622595204e-12, -6.633512137931861e-13, 8.437156593844515e-14, -1.072851236216559e-14, 1.363951118001507e-15, -1.733773486979494e-16, 2.2036052133547518e-17, -2.800485953599507e-18, 3.5587629654758335e-19],
    [0.301283666354101, 0.1326731674946131, -0.02331025811823364, -0.0005412108385917146, 8.018581101884489e-05, 3.1735524235759226e-06, -3.1530684471752777e-07, 9.665832046049404e-09, -8.055945874462459e-10, 8.547950629980883e-11, -7.2468506700342106e-12, 6.021968081391444e-13, -5.0837413054358335e-14, 4.290567138699979e-15, -3.6139060369506943e-16, 3.0417220218289865e-17, -2.558889109849209e-18, 2.1518079103131313e-19],
    [0.3766770153159828, -0.055494570654174374, -0.02116625235879072, 0.0009014462829116382, 8.227512287926233e-05, -2.4279385537654332e-06, -1.6768009458758877e-07, 4.899630725321434e-09, 7.898066747821307e-11, 1.2375068358567536e-12, -3.7306418394499474e-13, 1.9570862726340928e-14, -1.0915656542636146e-15, 7.08785500714795e-17, -4.529169831853434e-18, 2.8503396980977223e-19],
    [-0.33745034122703027, -0.0070425270601984545, 0.006654493586584691, -7.4280015064438385e-06, -1.8173818674083508e-05, 3.491306307085964e-08, 2.530521520619087e-08, -1.0684734520909606e-10, -1.7962782806066448e-11, -2.294667651488898e-14, 1.4579332947542457e-14, -2.488353583412683e-16, 7.186255927864818e-18, -5.472762459561532e-19],
    [-0.16189541312625483, -0.12624781434317325, 0.013042649563284787, 0.001083972014517501, -7.213709685849666e-05, -2.6785347310343236e-06, 1.4435789918426556e-07, 3.3643443693694545e-09, -1.560020200251503e-10, -2.401848676507291e-12, 9.888565071543225e-14, 1.354181058719771e-15, -5.112799581582321e-17, -2.1432834327692073e-19],
    [-0.2845519848199173, 0.007769484535601838, 0.018028510828546437, -0.0002894024650084962, -8.657963985859634e-05, 1.301839541234229e-06, 1.6157209501073907e-07, -2.175556530058583e-09, -1.6366442326762155e-10, 2.002679843115681e-12, 1.0305969350999348e-13, -1.125674296010306e-15, -4.59250624638951e-17, 4.8163103230968895e-19],
    [-0.15032514666799657, 0.11776191437431678, 0.007705890281903278, -0.0012859420215951749, -2.9381634399449933e-05, 3.948781395100599e-06, 4.3112540114995723e-08, -5.594925297114304e-09, -3.4391145875972816e-11, 4.600450185007373e-12, 1.692424877875861e-14, -2.466339599263933e-15, -5.892091204807627e-18, 9.41669605240926e-19],
    [0.25342383146916225, -0.02407562696423841, -0.004771121775030822, 0.0001681347414219302, 1.3174174157073809e-05, -3.899766479876559e-07, -1.7240673537695867e-08, 4.499100046542962e-10, 1.3294644819197537e-11, -3.132500224169617e-13, -6.777196068425029e-15, 1.4617021774377875e-16, 2.4693547047031445e-18, -4.9261536685464183e-20],
    [0.23365068948035148, 0.015293330667552365, -0.01528652527099204, -3.0915215108918936e-05, 7.805439664127627e-05, -2.517199468637873e-07, -1.5489625984308416e-07, 7.534053822610711e-10, 1.626031915551289e-10, -8.720863728050376e-13, -1.0599698035133866e-13, 5.768390226702613e-16, 4.717732466596147e-17, -2.516443801627877e-19],
    [0.15472409381303218, -0.0888704625033301, -0.008941003795744584, 0.0009928016281922252, 4.0368702961279854e-05, -3.1844507879964204e-06, -7.103662048756412e-08, 4.722804060850329e-09, 6.654530306875808e-11, -4.01428167765523e-12, -3.900577311369229e-14, 2.2139325960322253e-15, 1.5728967914891757e-17, -8.573908638924572e-19],
    [-0.22316138411376832, 0.013937692503691743, 0.004452857093419249, -0.00010314926941787051, -1.3079322936887934e-05, 2.553084445867071e-07, 1.807255181330985e-08, -3.126888591178946e-10, -1.4505539315505063e-11, 2.2792585426308374e-13, 7.629779662661571e-15, -1.1039574748157506e-16, -2.8399038662222573e-18, 3.817760511271881e-20],
    [-0.19693745902947174, -0.03032428881590143, 0.013075266891405948, 0.0002324180771291636, -6.854174794268436e-05, -4.6651525267548565e-07, 1.4059945644015605e-07, 3.528256316246293e-10, -1.5231479913406364e-10, -6.448204180905439e-14, 1.0184234312777762e-13, -7.061831449306286e-17, -4.62592356886535e-17, 6.126675219513988e-20],
    [-0.1570425924510451, 0.0672497808789419, 0.009556078334706189, -0.000761858121076977, -4.608370649989992e-05, 2.500760405424496e-06, 8.727613328300252e-08, -3.81595905393825e-09, -8.773304038457082e-11, 3.3356746714613786e-12, 5.47454497964318e-14, -1.884742933888757e-15, -2.3340007551487927e-17, 7.448623689376277e-19],
    [0.20132944912239698, -0.006760754694300449, -0.0041383397961281786, 5.538277264252567e-05, 1.2549705732420379e-05, -1.481244164098065e-07, -1.79157468391892e-08, 1.9352771714914208e-10, 1.4811221122152946e-11, -1.4882870749150936e-13, -7.98612940430324e-15, 7.528025518458209e-17, 3.0336410738319483e-18, -2.6965319616198782e-20],
    [0.16674364888251877, 0.04121762294191327, -0.011171965128146142, -0.00037375174171538146, 5.943052452768562e-05, 9.776153017257604e-07, -1.2426665550863188e-07, -1.1800229956231983e-09, 1.3747492463675975e-10, 8.073934842022246e-13, -9.378273604698204e-14, -3.51448929647687e-16, 4.335892572278887e-17, 1.0437415576838445e-19],
    [0.15731560613481507, -0.049518928746087494, -0.009840262402683602, 0.0005693095182629774, 4.907093301103571e-05, -1.9032618960424968e-06, -9.650583657599255e-08, 2.9665237842113813e-09, 1.0082212445521626e-10, -2.65156020942542e-12, -6.523948502638256e-14, 1.5305046688001545e-15, 2.873752856221199e-17, -6.166127592688447e-19],
    [-0.18404542168475918, 0.0011991304352421195, 0.0038391287144611897, -1.8005624852516962e-05, -1.184913904300462e-05, 6.166565850924477e-08, 1.7249380868238655e-08, -9.307676145628782e-11, -1.4544721326716548e-11, 7.899147763313904e-14, 7.988561441570969e-15, -4.297053729872999e-17, -3.084809165282309e-18],
    [-0.14005737081355313, -0.04938457010513853, 0.009451843005749506, 0.0004775676284800102, -5.0792345294010396e-05, -1.353522629550734e-06, 1.0757721166637798e-07, 1.8009165962170218e-09, -1.2076129448835804e-10, -1.3834250325093385e-12, 8.363457701877206e-14, 6.906463464691813e-16, -3.923283143370235e-17, -2.4202831736132816e-19],
    [-0.15556639851026166, 0.03424382135454234, 0.009894789676374178, -0.0004024595652753604, -5.0324872982665155e-05, 1.3746739877779508e-06, 1.0119460789606022e-07, -2.1893487613348027e-09, -1.0822319811390714e-10, 1.999260188096587e-12, 7.166935706985769e-14, -1.1780347926909505e-15, -3.226686096014981e-17, 4.838068416764569e-19],
    [0.1694557868544176, 0.003329716954606, -0.0035508680846389764, -1.2438638025344758e-05, 1.1062404484496671e-05, 9.613643412018115e-09, -1.6295766183827316e-08, 8.441352297049111e-12, 1.392074366697323e-11, -1.8520212898020476e-14, -7.747374055961134e-15, 1.4183761632656504e-17, 3.0296761128670663e-18],
    [0.11551265115298796, 0.055468091818017345, -0.007850564097573736, -0.0005542844143795531, 4.254983446289726e-05, 1.6318817132269164e-06, -9.103804807289106e-08, -2.2662266533010666e-09, 1.033624694074532e-10, 1.8237882476642347e-12, -7.244960209006564e-14, -9.563829428876518e-16, 3.4397981851536486e-17, 3.526771659945801e-19],
    [0.15185260643706866, -0.02073706956474342, -0.009766181951076562, 0.00025461846858167674, 5.030986437465776e-05, -9.015265775187508e-07, -1.0262858109179282e-07, 1.4812307411457281e-09, 1.1145714986380083e-10, -1.3907639902874352e-12, -7.497781264774155e-14, 8.403415982613848e-16, 3.4278709798734383e-17, -3.530507224751483e-19],
    [-0.15656728710115117, -0.00711851931459284, 0.003268728988845393, 3.780296353704745e-05, -1.022137064194032e-05, -6.924374462651311e-08, 1.5160610420999774e-08, 6.313616083684087e-11, -1.3061975833860446e-11, -3.3435850643248633e-14, 7.337523674036463e-15, 1.1012937527592478e-17, -2.8967841144297042e-18],
    [-0.09245926670761005, -0.059810760571479146, 0.006335979042041136, 0.0006093899178386611, -3.464411190179457e-05, -1.8336477072225281e-06, 7.483578305408343e-08, 2.607917206302058e-09, -8.584053451903095e-11, -2.152653812320047e-12, 6.081206734354436e-14, 1.1587835587227618e-15, -2.9184783492631845e-17, -4.387504473159754e-19],
]

