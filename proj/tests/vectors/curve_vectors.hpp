// Generated by scripts/refvec.py; do not edit by hand.
#pragma once

namespace refvec {

inline constexpr const char* fp_a = "123456789abcdef0fedcba9876543210aa55aa55aa55aa55123456789abcdef0fedcba9876543210aa55aa55aa55aa55";
inline constexpr const char* fp_b = "0fedcba987654321123456789abcdef055aa55aa55aa55aa0fedcba987654321123456789abcdef055aa55aa55aa55aa";
inline constexpr const char* fp_mul = "00597d1a49a2c29389fd85b175b81f7bd0a9074079ac9a872c6b3efeae7359673621ca2f1c3f7ef4b21d8c47498a865f";
inline constexpr const char* fp_inv_a = "0c7e4bdf7d4fb41bcdf42e41b41efd901e49597e4436bc507f532dae1b9e9c296ea396cbf6377229f047fa75e0086409";
inline constexpr const char* fr_a = "123456789abcdef0fedcba9876543210aa55aa55aa55aa550123456789abcdef";
inline constexpr const char* fr_b = "0f0ff0f00f0ff0f012344321567887659abccba9def00fed5555aaaa3333cccc";
inline constexpr const char* fr_mul = "2a841e9a68b25812760557948ed4c3c5cf85889a556824aa0435803c7e7e9a6d";
inline constexpr const char* fr_inv_a = "6e5708635075c852e7d4014873880d2e8bd10093ec7ca5673a620ed4eea03f0d";
inline constexpr const char* g1_mul_2_x = "0572cbea904d67468808c8eb50a9450c9721db309128012543902d0ac358a62ae28f75bb8f1c7c42c39a8c5529bf0f4e";
inline constexpr const char* g1_mul_2_y = "166a9d8cabc673a322fda673779d8e3822ba3ecb8670e461f73bb9021d5fd76a4c56d9d4cd16bd1bba86881979749d28";
inline constexpr const char* g1_mul_2_comp = "a572cbea904d67468808c8eb50a9450c9721db309128012543902d0ac358a62ae28f75bb8f1c7c42c39a8c5529bf0f4e";
inline constexpr const char* g1_mul_5_x = "10e7791fb972fe014159aa33a98622da3cdc98ff707965e536d8636b5fcc5ac7a91a8c46e59a00dca575af0f18fb13dc";
inline constexpr const char* g1_mul_5_y = "16ba437edcc6551e30c10512367494bfb6b01cc6681e8a4c3cd2501832ab5c4abc40b4578b85cbaffbf0bcd70d67c6e2";
inline constexpr const char* g1_mul_5_comp = "b0e7791fb972fe014159aa33a98622da3cdc98ff707965e536d8636b5fcc5ac7a91a8c46e59a00dca575af0f18fb13dc";
inline constexpr const char* g1_mul_16045690981402826360_x = "1559d8472cd3ce0e5800e2339fd8a3ae80f01345e9a1dc25d04cf3adc855191a19ed27f5b0d5eb14131d1ab9cdb259bf";
inline constexpr const char* g1_mul_16045690981402826360_y = "08c351fab7fcffd9a3c21c064d85aa2746e6da9b199aabe99a21b2ece432d0fbf79f63406205d37b9c28c3fae789ba9e";
inline constexpr const char* g1_mul_16045690981402826360_comp = "9559d8472cd3ce0e5800e2339fd8a3ae80f01345e9a1dc25d04cf3adc855191a19ed27f5b0d5eb14131d1ab9cdb259bf";
inline constexpr const char* g2_mul_2_x0 = "1638533957d540a9d2370f17cc7ed5863bc0b995b8825e0ee1ea1e1e4d00dbae81f14b0bf3611b78c952aacab827a053";
inline constexpr const char* g2_mul_2_x1 = "0a4edef9c1ed7f729f520e47730a124fd70662a904ba1074728114d1031e1572c6c886f6b57ec72a6178288c47c33577";
inline constexpr const char* g2_mul_2_y0 = "0468fb440d82b0630aeb8dca2b5256789a66da69bf91009cbfe6bd221e47aa8ae88dece9764bf3bd999d95d71e4c9899";
inline constexpr const char* g2_mul_2_y1 = "0f6d4552fa65dd2638b361543f887136a43253d9c66c411697003f7a13c308f5422e1aa0a59c8967acdefd8b6e36ccf3";
inline constexpr const char* g2_mul_2_comp = "aa4edef9c1ed7f729f520e47730a124fd70662a904ba1074728114d1031e1572c6c886f6b57ec72a6178288c47c335771638533957d540a9d2370f17cc7ed5863bc0b995b8825e0ee1ea1e1e4d00dbae81f14b0bf3611b78c952aacab827a053";
inline constexpr const char* g2_mul_7_x0 = "049cd1dbb2d2c3581e54c088135fef36505a6823d61b859437bfc79b617030dc8b40e32bad1fa85b9c0f368af6d38d3c";
inline constexpr const char* g2_mul_7_x1 = "0d0273f6bf31ed37c3b8d68083ec3d8e20b5f2cc170fa24b9b5be35b34ed013f9a921f1cad1644d4bdb14674247234c8";
inline constexpr const char* g2_mul_7_y0 = "08b7ae4dbf802c17a6648842922c9467e460a71c88d393ee7af356da123a2f3619e80c3bdcc8e2b1da52f8cd9913ccdd";
inline constexpr const char* g2_mul_7_y1 = "05ecf93654b7a1885695aaeeb7caf41b0239dc45e1022be55d37111af2aecef87799638bec572de86a7437898efa7020";
inline constexpr const char* g2_mul_7_comp = "8d0273f6bf31ed37c3b8d68083ec3d8e20b5f2cc170fa24b9b5be35b34ed013f9a921f1cad1644d4bdb14674247234c8049cd1dbb2d2c3581e54c088135fef36505a6823d61b859437bfc79b617030dc8b40e32bad1fa85b9c0f368af6d38d3c";
inline constexpr const char* pair_g1_g2_0 = "11619b45f61edfe3b47a15fac19442526ff489dcda25e59121d9931438907dfd448299a87dde3a649bdba96e84d54558";
inline constexpr const char* pair_g1_g2_1 = "153ce14a76a53e205ba8f275ef1137c56a566f638b52d34ba3bf3bf22f277d70f76316218c0dfd583a394b8448d2be7f";
inline constexpr const char* pair_g1_g2_2 = "095668fb4a02fe930ed44767834c915b283b1c6ca98c047bd4c272e9ac3f3ba6ff0b05a93e59c71fba77bce995f04692";
inline constexpr const char* pair_g1_g2_3 = "16deedaa683124fe7260085184d88f7d036b86f53bb5b7f1fc5e248814782065413e7d958d17960109ea006b2afdeb5f";
inline constexpr const char* pair_g1_g2_4 = "09c92cf02f3cd3d2f9d34bc44eee0dd50314ed44ca5d30ce6a9ec0539be7a86b121edc61839ccc908c4bdde256cd6048";
inline constexpr const char* pair_g1_g2_5 = "111061f398efc2a97ff825b04d21089e24fd8b93a47e41e60eae7e9b2a38d54fa4dedced0811c34ce528781ab9e929c7";
inline constexpr const char* pair_g1_g2_6 = "01ecfcf31c86257ab00b4709c33f1c9c4e007659dd5ffc4a735192167ce197058cfb4c94225e7f1b6c26ad9ba68f63bc";
inline constexpr const char* pair_g1_g2_7 = "08890726743a1f94a8193a166800b7787744a8ad8e2f9365db76863e894b7a11d83f90d873567e9d645ccf725b32d26f";
inline constexpr const char* pair_g1_g2_8 = "0e61c752414ca5dfd258e9606bac08daec29b3e2c57062669556954fb227d3f1260eedf25446a086b0844bcd43646c10";
inline constexpr const char* pair_g1_g2_9 = "0fe63f185f56dd29150fc498bbeea78969e7e783043620db33f75a05a0a2ce5c442beaff9da195ff15164c00ab66bdde";
inline constexpr const char* pair_g1_g2_10 = "10900338a92ed0b47af211636f7cfdec717b7ee43900eee9b5fc24f0000c5874d4801372db478987691c566a8c474978";
inline constexpr const char* pair_g1_g2_11 = "1454814f3085f0e6602247671bc408bbce2007201536818c901dbd4d2095dd86c1ec8b888e59611f60a301af7776be3d";
inline constexpr const char* pair_5g1_7g2_0 = "1270e98e1ac79ea364553c1ad06929d7ba0d349296fd8361c7c1786a13524458ed8db3f281929e482c9ba932e8dcfe03";
inline constexpr const char* pair_5g1_7g2_1 = "16593419180dd7a1f77672ccf7389d6ad572b53e7aefbf5847d0c7246778d7d2435ef7ecc8525a9770535961e6698661";
inline constexpr const char* pair_5g1_7g2_2 = "1147043df946d2dd3379307e2c1898671125105f3289927ff906122c8cfa2c819a8eae50292ff616391170fe65c17ccc";
inline constexpr const char* pair_5g1_7g2_3 = "0078a99284f25fdd8c477b1feafca8ac3680f4d862638af9f417b4954005fa9ab9e1e1bd15bd83da019112b288881f88";
inline constexpr const char* pair_5g1_7g2_4 = "0a2dc006b8608efecefd7574f4d590f5260425168568951b78bbc6808957c0d8d77434d853973975a91ef9b27e18f6f9";
inline constexpr const char* pair_5g1_7g2_5 = "08f22aa384cd6d0ba85faeda1f7c3e68db13cc6fa8cb445dbb8e10940db4541334672ced81cd1fd269def1e72c68b476";
inline constexpr const char* pair_5g1_7g2_6 = "18931dd4246a144d7d96d5048652bdfd3e73ac1f38d2cde8e38ac02ddd148ca5f43a0594dbea2b0d13784da59d81128e";
inline constexpr const char* pair_5g1_7g2_7 = "14cf73e8aea49283b2e1bd0f15bea68a86830a4fa600a3279d3732009ab8dbbb31afd5adaae9b863f1c58da8b0de78ae";
inline constexpr const char* pair_5g1_7g2_8 = "1432a01c639292d43465b248a48b02b2a20c58fc976d31e9c322dcc03db81a9f0b6391bdb5fe4ca489c5236dfd23a62d";
inline constexpr const char* pair_5g1_7g2_9 = "190df6ba5f0d82e7c3ef64ef28227cf521478d8fdf002f67b743784122b48624938b6d9c4f6eb3deb4042750bb5c321f";
inline constexpr const char* pair_5g1_7g2_10 = "084aa2cd3841d3cc4b6e4e88733e8f11d8b40ab5f38432466e22af8629089f0bc1ae680e50c40373690a3a249a16dd3c";
inline constexpr const char* pair_5g1_7g2_11 = "17707baa67ea2eacfac823b4ba0a1fefa1d3dba784c3533e0d674bfef33b977bb803550a69a3e83645a63760ec2c786d";
inline constexpr const char* rng42_u64 = "04b6332fe1a04a89";
inline constexpr const char* rng42_fr = "6c2eeba9b0a342eab9f33798189b64bacd4668392af0cba105a234a2e75191f5";
inline constexpr const char* rng7_fr0 = "72a3b77217948b694c10be23b21132aa85fd378c7ef1c144d5bc79b9c949efbe";
inline constexpr const char* srs42_tau = "629a34cc1f7a463e1140531b081d43ed721ac2f551f20a38ebf96d8aa8b41325";
inline constexpr const char* srs42_g1_pow1 = "8ade4f0e7324ea8ba90227a895ad6c1fd2405e440e5cb0aecda5b9775be49b5807286739600c7541dc91cc65a68fc92d";
inline constexpr const char* srs42_g1_pow2 = "98a9aca7ee6c7137bf027ca251d2806fc774b079b61a5ed4e9bfc9b2113bdde82353f0ad87292a7b56c0ae8503a67678";
inline constexpr const char* srs42_g2_pow1 = "829aa60ef0e7e3596da6ca4bd187b7e6a3f2e73b82ca0c8ebf16e3e4a422eaa4d53822c6ee114f4c79b958e4581785911484b1642596045fdee3000cd5ce87c5dc44aa11e98c5b4c6d3908fd324984ad72b156e76bca799015957e998fd346d7";
inline constexpr const char* kzg8_commit = "945f83b5788d512d62600c8ca433f310a04627b37aa5405458fca98b99ce316cf1c4d1175d61ae9496bae72501ede134";
inline constexpr const char* kzg8_open2 = "8e1956f64a6efd4ab499532b98bec64da128202a5046b36b36cbde6d54fafebab338a1ec4c898b675c2544dc0f797648";
inline constexpr const char* amt8_node_0 = "a4f464f750ace318296186d2b854372107dde7a204c9cc8405b39b43bf63c84fe499d74467cb257121189c1b39536935";
inline constexpr const char* amt8_node_01 = "b8917de749559546d7ad698d1454f252d131a9dfa65383c92f869993a62c9aa05455302a38afac2528789fa0d11dbeea";
inline constexpr const char* amt8_node_010 = "a9ece308f9d1f0131765212deca99697b112d61f9be9a5f1f3780a51335b3ff981747a0b2ca2179b96d2c0c9024e5224";
inline constexpr const char* amt8_vc = "945f83b5788d512d62600c8ca433f310a04627b37aa5405458fca98b99ce316cf1c4d1175d61ae9496bae72501ede134";
inline constexpr const char* merkle4_root = "2e1cf3e1912a6b3b01cfc25e4ec05c81172499c5647cdd7fbcbc6cb152720428";
inline constexpr const char* lat4_commit = "2516,610,5491,10367,73,6554,7078,17";
inline constexpr const char* lat4_node0_first16 = "0,1,1,1,0,0,0,1,0,1,0,0,0,1,0,1";
inline constexpr const char* lat4_chain_0_1_first16 = "0,1,1,1,0,0,0,1,0,1,0,0,0,1,0,1";

}  // namespace refvec
