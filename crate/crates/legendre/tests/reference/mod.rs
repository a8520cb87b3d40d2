//! Reference values from 40-digit evaluations (Rodrigues formula on the
//! segment, hypergeometric representations off it).

pub const SEG: &[(usize, usize, f64)] = &[
    (0, 0, 1.0),
    (1, 0, 0.3),
    (1, 1, -0.9539392014169457),
    (2, 0, -0.365),
    (2, 1, -0.8585452812752511),
    (2, 2, 2.73),
    (3, 0, -0.3825),
    (3, 1, 0.7869998411689801),
    (3, 2, 4.095),
    (3, 3, -13.021270099341308),
    (4, 0, 0.0729375),
    (4, 1, 1.695626930518621),
    (4, 2, -2.52525),
    (4, 3, -27.344667208616748),
    (4, 4, 86.9505),
    (5, 0, 0.34538625),
    (5, 1, 0.1607983766388439),
    (5, 2, -10.462725),
    (5, 3, 8.65914461606197),
    (5, 4, 234.76635),
    (5, 5, -746.5094147952371),
];

pub const Q_1_1547: &[(usize, usize, f64)] = &[
    (0, 0, 1.3169595120655835),
    (1, 0, 0.5206931485821293),
    (1, 1, -1.23965728675392),
    (2, 0, 0.2433868119688853),
    (2, 1, -0.8301887313389137),
    (2, 2, 4.781080442088995),
    (3, 0, 0.12126915391270023),
    (3, 1, -0.5370613900617291),
    (3, 2, 3.6034784120669032),
    (3, 3, -34.19848152019815),
    (4, 0, 0.06251150206357718),
    (4, 1, -0.34008619479143193),
    (4, 2, 2.610576723225298),
    (4, 3, -27.00619450449022),
    (4, 4, 360.6228614793854),
    (5, 0, 0.03291233344890245),
    (5, 1, -0.2122427029555881),
    (5, 2, 1.8363420027909478),
    (5, 3, -20.633552253813335),
    (5, 4, 291.67518144796696),
    (5, 5, -5038.213371446455),
    (6, 0, 0.017580845908339724),
    (6, 1, -0.13106519427648033),
    (6, 2, 1.2626570385681741),
    (6, 3, -15.343878208779687),
    (6, 4, 229.5824494415868),
    (6, 5, -4133.640675399569),
    (6, 6, 87723.74303465465),
    (7, 0, 0.009490547903037676),
    (7, 1, -0.08028896951909288),
    (7, 2, 0.8526270098646272),
    (7, 3, -11.156629973873189),
    (7, 4, 176.51109744431128),
    (7, 5, -3315.0732282897334),
    (7, 6, 72655.9568132445),
    (7, 7, -1829937.306521263),
    (8, 0, 0.0051643891995232505),
    (8, 1, -0.04887479176337222),
    (8, 2, 0.5673354628744516),
    (8, 3, -7.959925474934737),
    (8, 4, 132.96337985668467),
    (8, 5, -2605.0125819324985),
    (8, 6, 59014.42026664541),
    (8, 7, -1525758.5959607472),
    (8, 8, 44491733.05141679),
];

pub const Q_2: &[(usize, usize, f64)] = &[
    (0, 0, 0.5493061443340549),
    (1, 0, 0.09861228866810968),
    (1, 1, -0.20327438748290555),
    (2, 0, 0.02118379383730165),
    (2, 1, -0.06494578651818185),
    (2, 2, 0.27708863233982695),
    (3, 0, 0.004871120345599044),
    (3, 1, -0.019817351366550908),
    (3, 2, 0.10421965673160279),
    (3, 3, -0.6795434886162391),
    (4, 0, 0.001161075831620414),
    (4, 1, -0.005886591019661766),
    (4, 2, 0.0368160162716521),
    (4, 3, -0.27600453359333565),
    (4, 4, 2.4276397290151626),
    (5, 0, 0.000282976717354255),
    (5, 1, -0.0017179703802893149),
    (5, 2, 0.01245678416670701),
    (5, 3, -0.1056385921831837),
    (5, 4, 1.0308484556062587),
    (5, 5, -11.42406479270504),
    (6, 0, 7.001810394859014e-05),
    (6, 1, -0.0004951604496788661),
    (6, 2, 0.0040842844414973834),
    (6, 3, -0.03867091976111876),
    (6, 4, 0.4149542311006138),
    (6, 5, -4.99331058527058),
    (6, 6, 66.78677729528104),
    (7, 0, 1.751577121968764e-05),
    (7, 1, -0.00014139650493755215),
    (7, 2, 0.0013074244290551798),
    (7, 3, -0.013674146035108624),
    (7, 4, 0.1601084841844576),
    (7, 5, -2.080681248639812),
    (7, 6, 29.789543010640518),
    (7, 7, -466.8737286941368),
    (8, 0, 4.418301118812288e-06),
    (8, 1, -4.0087364385090885e-05),
    (8, 2, 0.00041069548302982413),
    (8, 3, -0.0047030366884142204),
    (8, 4, 0.05968949585674403),
    (8, 5, -0.8335701453158008),
    (8, 6, 12.729092740280949),
    (8, 7, -211.38942898664564),
    (8, 8, 3799.1536066283006),
];

pub const Q_5: &[(usize, usize, f64)] = &[
    (0, 0, 0.2027325540540822),
    (1, 0, 0.013662770270410955),
    (1, 1, -0.02743810279223647),
    (2, 0, 0.0011045000010410666),
    (2, 1, -0.003323251419684012),
    (2, 2, 0.013410558560584419),
    (3, 0, 9.565316173491832e-05),
    (3, 1, -0.00038348855769544703),
    (3, 2, 0.0019306306812771135),
    (3, 3, -0.011716652328439119),
    (4, 0, 8.5901643997353e-06),
    (4, 1, -4.3031280201532877e-05),
    (4, 2, 0.00025964052088844235),
    (4, 3, -0.0018345410315061268),
    (4, 4, 0.014869190890911016),
    (5, 0, 7.88950209683046e-07),
    (5, 1, -4.741205147936058e-06),
    (5, 2, 3.334645077240819e-05),
    (5, 3, -0.0002688900593509397),
    (5, 4, 0.0024469234243290135),
    (5, 5, -0.024819067165882943),
    (6, 0, 7.357325564850472e-08),
    (6, 1, -5.157203854571872e-07),
    (6, 2, 4.142786565838504e-06),
    (6, 3, -3.754167075088976e-05),
    (6, 4, 0.0003790351599483055),
    (6, 5, -0.004221059244018544),
    (6, 6, 0.05141977902679414),
    (7, 0, 6.937194150647266e-09),
    (7, 1, -5.5564836527460825e-08),
    (7, 2, 5.019041200474464e-07),
    (7, 3, -5.049516162344279e-06),
    (7, 4, 5.601705111657279e-05),
    (7, 5, -0.0006795560182465016),
    (7, 6, 0.008952303408285721),
    (7, 7, -0.12731133333880285),
    (8, 0, 6.595964698764909e-10),
    (8, 1, -5.942807986009099e-09),
    (8, 2, 5.962165183532339e-08),
    (8, 3, -6.59400933384661e-07),
    (8, 4, 7.973018577899796e-06),
    (8, 5, -0.0001046634800883639),
    (8, 6, 0.0014828141365526176),
    (8, 7, -0.02255655625340894),
    (8, 8, 0.3667880676187941),
];

pub const IMAG_HALF: &[(usize, usize, f64, f64)] = &[
    (0, 0, 0.0, -1.1071487177940904),
    (1, 0, -0.44642564110295474, 0.0),
    (1, 1, 0.7906163015947008, 0.0),
    (2, 0, 0.0, 0.2187551280698292),
    (2, 1, 0.0, -0.6029299296077806),
    (2, 2, 0.0, 1.8518076917278394),
    (3, 0, 0.1153211540104455, 0.0),
    (3, 1, -0.43226204038232535, 0.0),
    (3, 2, 1.7704807706804015, 0.0),
    (3, 3, -7.489752688701329, 0.0),
    (4, 0, 0.0, -0.06316033629323207),
    (4, 1, 0.0, 0.29960085903099465),
    (4, 2, 0.0, -1.5311778806288958),
    (4, 3, 0.0, 8.131869723942119),
    (4, 4, 0.0, -43.25658651309298),
    (5, 0, -0.03541262054444754, 0.0),
    (5, 1, 0.2032765840680377, 0.0),
    (5, 2, -1.2441947204174595, 0.0),
    (5, 3, 7.917427531584884, 0.0),
    (5, 4, -51.10536069108162, 0.0),
    (5, 5, 325.3537924003745, 0.0),
    (6, 0, 0.0, 0.02017204474528315),
    (6, 1, 0.0, -0.13591678836235208),
    (6, 2, 0.0, 0.9687935505265609),
    (6, 3, 0.0, -7.169702122606697),
    (6, 4, 0.0, 54.11489740844392),
    (6, 5, 0.0, -408.6984063993334),
    (6, 6, 0.0, 3018.2825809952556),
];

pub const P_IMAG_HALF: &[(usize, usize, f64, f64)] = &[
    (0, 0, 1.0, 0.0),
    (1, 0, 0.0, 0.5),
    (1, 1, 0.0, 1.118033988749895),
    (2, 0, -0.875, 0.0),
    (2, 1, -1.6770509831248424, 0.0),
    (2, 2, -3.75, 0.0),
    (3, 0, 0.0, -1.0625),
    (3, 1, 0.0, -3.773364712030895),
    (3, 2, 0.0, -9.375),
    (3, 3, 0.0, -20.96313728906053),
    (4, 0, 1.5859375, 0.0),
    (4, 1, 6.638326808202501, 0.0),
    (4, 2, 25.78125, 0.0),
    (4, 3, 73.37098051171185, 0.0),
    (4, 4, 164.0625, 0.0),
    (5, 0, 0.0, 2.27734375),
    (5, 1, 0.0, 12.184823549266433),
    (5, 2, 0.0, 57.421875),
    (5, 3, 0.0, 238.45568666306352),
    (5, 4, 0.0, 738.28125),
    (5, 5, 0.0, 1650.8470615135166),
    (6, 0, -3.4091796875, 0.0),
    (6, 1, -21.369298074036077, 0.0),
    (6, 2, -124.072265625, 0.0),
    (6, 3, -632.8247069135147, 0.0),
    (6, 4, -2768.5546875, 0.0),
    (6, 5, -9079.658838324342, 0.0),
    (6, 6, -20302.734375, 0.0),
];

pub const P_2: &[(usize, usize, f64)] = &[
    (0, 0, 1.0),
    (1, 0, 2.0),
    (1, 1, 1.7320508075688772),
    (2, 0, 5.5),
    (2, 1, 10.392304845413264),
    (2, 2, 9.0),
    (3, 0, 17.0),
    (3, 1, 49.363448015713004),
    (3, 2, 90.0),
    (3, 3, 77.94228634059948),
    (4, 0, 55.375),
    (4, 1, 216.50635094610965),
    (4, 2, 607.5),
    (4, 3, 1091.1920087683927),
    (4, 4, 945.0),
    (5, 0, 185.75),
    (5, 1, 912.5742692378523),
    (5, 2, 3465.0),
    (5, 3, 9547.930076723436),
    (5, 4, 17010.0),
    (5, 5, 14731.0921183733),
    (6, 0, 634.9375),
    (6, 1, 3755.5191635112183),
    (6, 2, 17994.375),
    (6, 3, 67108.30853925615),
    (6, 4, 182857.5),
    (6, 5, 324084.02660421265),
    (6, 6, 280665.0),
];
