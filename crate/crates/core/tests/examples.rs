// Every runnable example doubles as a test.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run_example();
            }
        }
    };
}

example!(snf_witness);
example!(number_field_arith);
example!(lucas_divisibility);
example!(quadratic_basis);
example!(quartic_power_module);
example!(sqrt_family);
example!(degenerate_trace);
example!(dk_sequence);
example!(monogenic_scan);
