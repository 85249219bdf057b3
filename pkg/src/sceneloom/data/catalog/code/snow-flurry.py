"""Snow Flurry generator (Weather)."""

PARAMS = {
    "size": 2.141,
    "detail": 1,
    "roughness": 0.328,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Snow Flurry"
    for key, value in params.items():
        node[key] = value
    return node
