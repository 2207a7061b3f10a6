macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;

        #[test]
        fn $name() {
            $name::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(weights_and_partitions, "../examples/weights_and_partitions.rs");
example!(q_polynomials, "../examples/q_polynomials.rs");
example!(gelfand_tsetlin, "../examples/gelfand_tsetlin.rs");
example!(overlaid_patterns, "../examples/overlaid_patterns.rs");
example!(weyl_characters, "../examples/weyl_characters.rs");
example!(pieri_products, "../examples/pieri_products.rs");
example!(tensor_products, "../examples/tensor_products.rs");
example!(truncated_weyl, "../examples/truncated_weyl.rs");
example!(m_modules, "../examples/m_modules.rs");
example!(filtrations, "../examples/filtrations.rs");
example!(fusion_dimensions, "../examples/fusion_dimensions.rs");
example!(weyl_decomposition, "../examples/weyl_decomposition.rs");
example!(verification_suites, "../examples/verification_suites.rs");
