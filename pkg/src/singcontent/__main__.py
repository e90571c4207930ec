from singcontent.cli import main

raise SystemExit(main())
