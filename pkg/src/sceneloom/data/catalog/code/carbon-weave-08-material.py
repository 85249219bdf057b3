"""Carbon Weave 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.33,
    "detail": 3,
    "roughness": 0.449,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
